"""Families of 9-congruent elliptic curves: exact constructions and checks."""
