from prefdist.linext._types import LinextCaps, SamplerConfig, SwapDistribution, mixing_steps
from prefdist.linext._exact import count_extensions, enumerate_extensions, exact_class_offsets, extension_orders, \
                                   minimal_extension, position_distribution, precedence_probabilities
from prefdist.linext._chain import ExtensionSampler, advance_chains, chain_step, run_chains, sample_extension, \
                                   sample_many
from prefdist.linext._heights import average_heights, exact_heights, extension_heights, sampled_heights
from prefdist.linext._diagnostics import UniformityTest, chi_square_uniformity, empirical_distribution, \
                                         total_variation, uniformity_tv
