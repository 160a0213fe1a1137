"""Homological invariants of monomial bound quiver algebras over GF(p)."""
