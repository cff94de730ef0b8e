"""Represent states as points of a generalized Bloch sphere.

Measurements are simplexes whose vertices are the images of the eigenstates.
The collapse of the point on a vertex is driven by the breaking of an
abstract membrane; a uniform membrane gives back the Born rule.

"""
