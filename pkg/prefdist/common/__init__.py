from prefdist.common.constants import CONFIG_ENV, EXACT_TOLERANCE, ISO8601_UTC, PROBABILITY_TOLERANCE, SEED_ENV
from prefdist.common.listenable import Listenable
from prefdist.common.pools import shared_pool
from prefdist.common.streams import derive_seed, stream
from prefdist.common.types import AsyncTaskStatus, Closeness, ClosenessPolicy, EstimationMethod, EvaluationMode, \
                                  MetricKind, Relation, SummaryStat, WorkerPool
from prefdist.common.exceptions import CapExceeded, PrefdistError, SpaceMismatch
