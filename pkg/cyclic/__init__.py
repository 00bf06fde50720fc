"""Factorizations of cyclic groups: chains, Krasner and Hajós pairs."""

from cyclic.chains import chain_count, enumerate_chains, omega
from cyclic.equations import LemmaDecomposition, lemma_L72_decompose
from cyclic.factorization import complements, enumerate_factorizations, is_factorization, residues
from cyclic.hajos import circ, hajos_enumerate, hcg_pairs, is_hajos, krasner_companions, solve_eq_EF
from cyclic.krasner import (
    KrasnerDecomposition,
    chain_of_krasner,
    enumerate_krasner,
    is_krasner,
    krasner_decompose,
    krasner_from_chain,
    krasner_pairs,
)
from cyclic.models import DivisorChain, FactorizationPair

__all__ = [
    "DivisorChain",
    "FactorizationPair",
    "KrasnerDecomposition",
    "LemmaDecomposition",
    "chain_count",
    "chain_of_krasner",
    "circ",
    "complements",
    "enumerate_chains",
    "enumerate_factorizations",
    "enumerate_krasner",
    "hajos_enumerate",
    "hcg_pairs",
    "is_factorization",
    "is_hajos",
    "is_krasner",
    "krasner_companions",
    "krasner_decompose",
    "krasner_from_chain",
    "krasner_pairs",
    "lemma_L72_decompose",
    "omega",
    "residues",
    "solve_eq_EF",
]
