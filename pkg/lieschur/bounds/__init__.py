from .bounds import (Winner, VerdictStatus, Verdict, BoundReport, SequenceProfile, InductiveStep, bound_new,
                     bound_hardy, bound_moneyhun, verify_nontriviality, euler_identity_free_nilpotent,
                     exact_sequence_profile, verify_sigma_bound, inductive_step, compare, compare_many)
