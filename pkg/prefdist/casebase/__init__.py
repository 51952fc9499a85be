from prefdist.casebase._exceptions import CaseBaseError, InconsistentElicitation
from prefdist.casebase._casebase import Case, CaseBase, case_order
from prefdist.casebase._io import format_case, load_casebase, parse_utility, read_casebase, save_casebase, \
                                  write_casebase
from prefdist.casebase._state import ElicitationState, Query
from prefdist.casebase._retrieval import RankedCase, closest_set, nearest
from prefdist.casebase._elicitation import ElicitationSession, SessionLog, SessionStep, merge_default, open_queries, \
                                           run_elicitation, select_query, simulated_answer, write_session_csv
