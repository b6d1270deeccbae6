"""Finite partial monoids, their rewriting systems, and normal form algebra."""

from .confluence import (ConfluenceVerdict, EssentialTriple,
                         GenericCriticalPair, PairClass, apply_rule,
                         converges, essential_critical_pairs,
                         generic_critical_pairs, is_confluent, newman_check)
from .magma import (Leaf, Node, Tree, evaluate, format_tree, leaf_labels,
                    leaves, parse_tree, rank, right_comb, rotation_closure,
                    rotations, verify_rotation_invariance)
from .monoid import (InvertibilityFlags, ParseError, PartialMonoid,
                     TotalMonoid, ValidationReport, Violation, carrier_cap,
                     gen_disjoint_union_monoid, gen_no_common_letters_monoid,
                     invertibility_report, is_catenary, parse_monoid,
                     random_monoid, serialize_monoid,
                     total_associativity_witnesses, totalize, validate)
from .rewriting import (LstdDecomposition, ReductionTrace, RuleSet, TraceStep,
                        build_rules, convertible_bounded, expansions,
                        left_standard_decomposition, left_standard_step,
                        left_standard_successors, lstd, lstd_trace,
                        normal_forms, one_step_reductions, strip_identities)
from .star import (AssocCounterexample, AssocReport, StarTable,
                   assoc_modulo_congruence, associativity_iff_confluence,
                   associativity_search, build_star_table,
                   quotient_representatives, star)
from .words import (EMPTY, Word, embed, enumerate_irreducible, format_word,
                    is_irreducible, is_prefix, parse_word, prefixes)

__version__ = "0.1.0"
