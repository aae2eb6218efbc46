from .suffix_tree import SuffixTree
from .enumerate import PrimePathSet
from .enumerate import extend_candidates
from .enumerate import prime_paths
from .enumerate import simple_paths_bruteforce
from .enumerate import prime_paths_bruteforce
