"""
Copyright (c) 2026 The prefdist developers

This program is free software: you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
Public License for more details.

You should have received a copy of the GNU General Public License along
with this program. If not, see <http://www.gnu.org/licenses/>.
"""

import prefdist.common.canon as canon
from prefdist.config._estimation import parsing
from prefdist.config._tree_builder import Configuration

step_constant   = parsing(canon.positive_real, "step constant")
batch_size      = parsing(canon.positive_int, "batch size")
enumeration_cap = parsing(canon.positive_int, "enumeration cap")
count_cap       = parsing(canon.positive_int, "counting cap")
exact_pair_cap  = parsing(canon.positive_int, "exact pair cap")


class SamplerSection(Configuration):
    """ Linear extension sampler configuration stub """


class LinextSection(Configuration):
    """ Exact linear extension computation budgets stub """
