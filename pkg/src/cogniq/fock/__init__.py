"""Analyse combinations of concepts.

Membership weights of conjunctions and disjunctions are modelled in a
two-sector Fock space, compared with the bounds of classical probability, and
entanglement and identical-concept statistics are evaluated.

"""
