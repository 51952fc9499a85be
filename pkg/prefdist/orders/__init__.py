from prefdist.orders._exceptions import CycleError, OrderError, OrderSyntaxError
from prefdist.orders._space import Outcome, OutcomeSpace
from prefdist.orders._weak import HeightProfile, WeakOrder, all_strict_orders, build_weak_order, heights, \
                                  midrank_heights
from prefdist.orders._partial import LinearExtension, PartialPreferenceOrder, as_partial, build_partial_order
from prefdist.orders._operations import AnyOrder, is_extension, relation_of, restrict, top_k
from prefdist.orders._syntax import format_order, parse_partial_order, parse_weak_order
