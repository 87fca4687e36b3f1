"""Voting rules, exact-likelihood estimation, and reinforcement-violation search."""

from ._core import (
    ParseError,
    Profile,
    check_violation,
    combine,
    kemeny,
    margin_matrix,
    mle_rankings,
    mle_winners,
    pairwise_counts,
    profile_likelihood,
    realize_margins,
    search_violation,
    tally,
)

__all__ = [
    "ParseError",
    "Profile",
    "check_violation",
    "combine",
    "kemeny",
    "margin_matrix",
    "mle_rankings",
    "mle_winners",
    "pairwise_counts",
    "profile_likelihood",
    "realize_margins",
    "search_violation",
    "tally",
]
