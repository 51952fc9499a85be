from prefdist.metrics._types import CSV_HEADER, DistanceEstimate, DistanceInterval, EstimationConfig
from prefdist.metrics._estimation import chebyshev_interval, chebyshev_sample_size, choose_sample_size, summarise
from prefdist.metrics.complete import conflict, distance, distance_matrix, euclidean, footrule, lukasiewicz, \
                                      normalized, probabilistic, relative_equivalence_witness, similarity, \
                                      upper_bound
from prefdist.metrics.utility import Prospect, UtilityDistanceEstimator, UtilityVector, canonical_representative, \
                                     expected_utility, induced_weak_order, probabilistic_distance_utilities, \
                                     sample_prospect, strategically_equivalent, utility_distance, \
                                     utility_euclidean, utility_footrule
from prefdist.metrics.partial import PartialDistanceEstimator, avg_distance, compare_closeness, extreme_interval, \
                                     generalized_euclidean, generalized_footrule, topk_distance
