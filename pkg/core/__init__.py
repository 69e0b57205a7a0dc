# core/__init__.py
from .errors import CombinatoricsError
from .polynomial import IntPolynomial, gaussian_binomial
from .graphcore import LabeledGraph, isomorphism_chain
from .perm import Permutation
from .words import ReducedWordEnumerator, enumerate_reduced_words, build_word_graph
from .family import FamilyVerifier, family_permutation, generating_series_check
from .tableaux import Partition, RecordingTableau, build_tableau_hasse
from .simplex import LatticePoint, build_lattice_graph
from .verification import Verifier
