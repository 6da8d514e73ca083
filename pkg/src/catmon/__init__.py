"""Universal monoids of finite categories.

Normal forms and gcd/lcm in Um(S), interval monoids of posets, spindle
categories, floating homotopy group presentations, group-embeddability via
hom-set separation, and a bounded word-problem engine for homogeneous monoid
presentations.
"""
from .category import FiniteCategory, GcdCategoryReport
from .complexes import SimplicialComplex, barycentric, face_name
from .errors import *  # noqa: F401,F403
from .groups import (CategoryFunctor, EmbeddabilityReport, FreeAbelianWord,
                     FreeGroupWord, FreeProductWord, GroupSpec,
                     SeparationReport, check_separation,
                     embeddability_verdict, group_multiply, group_product,
                     highlighting_expansion, inject, sigma_image)
from .homotopy import (CrossCheckReport, FloatingDecomposition, SpanningTree,
                       chain_complex, cross_check, edge_name,
                       floating_decomposition, floating_presentation,
                       spanning_tree, tietze_collapse)
from .interval import (GcdCriterionReport, IntervalFunctor, IsotoneMap,
                       cat_of_poset, embed_free_group, embed_free_monoid,
                       gcd_criterion, interval_name)
from .poset import Poset
from .presentations import (GroupPresentation, format_word, free_reduce,
                            invert_word, parse_word, substitute)
from .presented import (AtomsReport, M6Report, MonoidPresentation, atoms,
                        braid3_presentation, c6_presentation,
                        common_right_multiple, congruence_class,
                        equal_in_monoid, left_divides_mod, m6_presentation,
                        verify_m6_embedding)
from .spindle import (Spindle, chain_arrow_name, detect_spindle,
                      is_extreme_spindle, spindle_category,
                      spindle_presentation)
from .universal import (ReducedSeq, RewriteTrace, components, divides,
                        elements_up_to, gcd_family, gcd_pair, generator,
                        greedy_normal_form, lcm_pair, multiply, product,
                        reduce_sequence, unit, universal_group_presentation)

__version__ = "0.1.0"
