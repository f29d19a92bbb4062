"""Humbert loci of abelian surfaces, toroidal boundary limits, and the
combinatorics of Mumford degenerate fibers."""

from ._core import *  # noqa: F401,F403
