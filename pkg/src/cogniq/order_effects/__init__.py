"""Model the answers to two questions asked in both orders.

Empirical :class:`.SequentialTable` are diagnosed with the QQ-equality and
fitted with projective models in a two-dimensional Hilbert space.

"""
