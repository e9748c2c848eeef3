"""Exact Kronecker coefficients of the symmetric group and related counts."""

from .characters import chi, chi_two_row, knapsack_to_charp
from .contingency import count_tables
from .errors import InputError, InvariantError
from .hooks import BarredTableau, count_hook_kron, is_ballot, reading_word, tableau_switch
from .kron import (compute, gapp_decomposition, kron_via_characters, kron_via_tables,
                   reduce, reduced_kron)
from .lr import lr_coefficient, lr_via_reduction, murnaghan_embedding, pieri_expand
from .partitions import Partition, partitions_of

__version__ = "0.1.0"
