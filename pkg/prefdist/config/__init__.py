from prefdist.config._tree_builder import ConfigValue, Configuration
from prefdist.config.config import PrefdistConfiguration
from prefdist.config._json import ConfigJSONEncoder, dump_configuration

# Stub classes for subconfigurations
from prefdist.config._elicitation import ElicitationSection
from prefdist.config._estimation import EstimationSection
from prefdist.config._linext import LinextSection, SamplerSection
from prefdist.config._log import LoggingConfig
