"""Faithfulness of the G-action on primitive middle cohomology of X_{n,r,d}.

An element g acts trivially iff chi(g) = 1 for every character chi whose
summand wedge^{n-r} H^1(D)_chi is nonzero.  Two routes decide this:

* :func:`faithfulness_certificate` exhibits an explicit set S of
  contributing characters with trivial joint kernel (the sign-flip
  characters for d = 2, the (k, s, t) family for d >= 3);
* :func:`brute_force_faithful` enumerates the whole group against every
  contributing character.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cover import _check_nrd, eigenspace_dimension, wedge_dimension
from .group import (
    CharacterVec,
    GroupElement,
    KernelReport,
    Permutation,
    StarParams,
    UsageError,
    admissible_t_values,
    canonicalize,
    characters,
    conjugate_character,
    evaluate_character,
    is_permutation,
    joint_kernel_is_diagonal,
    star_characters,
    star_parameters,
    star_parameters_with_t,
)

FAITHFUL = "faithful"
NOT_FAITHFUL = "not_faithful"

BRUTE_FORCE_LIMIT = 10**6


class CertificateFailure(RuntimeError):
    """The separating-set argument did not go through."""

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = tuple(diagnostics)


@dataclass(frozen=True)
class SeparatingEntry:
    character: CharacterVec
    eigen_dim: int
    wedge_dim: int


@dataclass(frozen=True)
class FaithfulnessCertificate:
    n: int
    r: int
    d: int
    verdict: str
    separating_set: tuple[SeparatingEntry, ...]
    kernel_report: KernelReport
    witness: Optional[GroupElement] = None
    star: Optional[StarParams] = None
    diagnostics: tuple[str, ...] = field(default=())

    def check(self) -> None:
        """Re-verify the certificate's invariants; raises AssertionError."""
        if self.verdict == FAITHFUL:
            assert self.kernel_report.diagonal
            assert all(e.wedge_dim >= 1 for e in self.separating_set)
            assert self.witness is None
        else:
            assert self.witness is not None and not self.witness.is_identity()
            for chi in contributing_characters(self.n, self.r, self.d):
                assert evaluate_character(chi, self.witness) == 0


def _entry(chi: CharacterVec, n: int, r: int) -> SeparatingEntry:
    return SeparatingEntry(chi, eigenspace_dimension(chi), wedge_dimension(chi, n, r))


def contributing_characters(n: int, r: int, d: int) -> list[CharacterVec]:
    return [chi for chi in characters(n, d) if wedge_dimension(chi, n, r)]


def quadric_verdict(n: int, r: int) -> FaithfulnessCertificate:
    """The d = 2 case analysis.

    * n+1 even, r = 2: only (1,...,1) contributes, so the product of two
      sign flips acts trivially.
    * n+1 even, r >= 3: the characters with zeros at two slots separate.
    * n+1 odd: the characters with a single zero separate.
    """
    if r < 2 or n <= r:
        raise UsageError(f"need 2 <= r < n (got n={n}, r={r})")
    d = 2
    if (n + 1) % 2 == 0 and r == 2:
        chi = CharacterVec(d, (1,) * (n + 1))
        witness = canonicalize([0, 1, 1] + [0] * (n - 2), d)
        cert = FaithfulnessCertificate(
            n=n, r=r, d=d, verdict=NOT_FAITHFUL,
            separating_set=(_entry(chi, n, r),),
            kernel_report=joint_kernel_is_diagonal([chi]),
            witness=witness,
            diagnostics=("only the all-ones character has a nonzero summand",),
        )
    else:
        if (n + 1) % 2 == 0:
            chars = []
            for i, j in itertools.combinations(range(n + 1), 2):
                row = [1] * (n + 1)
                row[i] = row[j] = 0
                chars.append(CharacterVec(d, tuple(row)))
            note = "characters chi_{i,j} (zeros at slots i < j)"
        else:
            chars = []
            for i in range(n + 1):
                row = [1] * (n + 1)
                row[i] = 0
                chars.append(CharacterVec(d, tuple(row)))
            note = "characters chi_i (zero at slot i)"
        entries = tuple(_entry(c, n, r) for c in chars)
        report = joint_kernel_is_diagonal(chars)
        if not report.diagonal or any(e.wedge_dim == 0 for e in entries):
            raise CertificateFailure(f"quadric certificate failed for n={n}, r={r}", [note])
        cert = FaithfulnessCertificate(
            n=n, r=r, d=d, verdict=FAITHFUL, separating_set=entries,
            kernel_report=report, diagnostics=(note,),
        )
    cert.check()
    return cert


def faithfulness_certificate(n: int, r: int, d: int) -> FaithfulnessCertificate:
    """Certificate via an explicit separating set S.

    For d >= 3, S = {chi_k} + {chi_(s,t,i)}.  The least admissible t is tried
    first; when one of its characters has a vanishing summand (this happens
    for r = 2 when s = t = 0), the remaining admissible t in [0, d) are
    tried in order and every rejection is recorded in the diagnostics.
    """
    _check_nrd(n, r, d)
    if d == 2:
        return quadric_verdict(n, r)

    diagnostics = []
    if n == 3 and r == 2:
        diagnostics.append("subcase n=3, r=2: wedge^1 needs s or t nonzero")
    first = star_parameters(n, d)
    candidates = [first.t] + [t for t in admissible_t_values(n, d) if t != first.t]
    for t in candidates:
        params = first if t == first.t else star_parameters_with_t(n, d, t)
        entries = tuple(_entry(c, n, r) for c in star_characters(params))
        vanishing = [e.character.entries for e in entries if e.wedge_dim == 0]
        if vanishing:
            diagnostics.append(
                f"(k,s,t)=({params.k},{params.s},{params.t}) rejected: "
                f"zero summand for {vanishing}"
            )
            continue
        report = joint_kernel_is_diagonal([e.character for e in entries])
        if not report.diagonal:
            diagnostics.append(
                f"(k,s,t)=({params.k},{params.s},{params.t}) rejected: "
                f"joint kernel has {report.cardinality} elements"
            )
            continue
        diagnostics.append(f"(k,s,t)=({params.k},{params.s},{params.t}) accepted")
        cert = FaithfulnessCertificate(
            n=n, r=r, d=d, verdict=FAITHFUL, separating_set=entries,
            kernel_report=report, star=params, diagnostics=tuple(diagnostics),
        )
        cert.check()
        return cert
    raise CertificateFailure(f"no admissible (k,s,t) certifies n={n}, r={r}, d={d}", diagnostics)


def _first_trivially_acting(n: int, r: int, d: int, chars: Sequence[CharacterVec], chunk=4096):
    mat = np.array([c.entries for c in chars], dtype=np.int64).T
    tails = itertools.product(range(d), repeat=n)
    next(tails)  # identity
    while True:
        block = list(itertools.islice(tails, chunk))
        if not block:
            return None
        g = np.zeros((len(block), n + 1), dtype=np.int64)
        g[:, 1:] = block
        hits = np.flatnonzero(np.all((g @ mat) % d == 0, axis=1))
        if hits.size:
            return GroupElement(d, tuple(int(x) for x in g[hits[0]]))


def brute_force_faithful(n: int, r: int, d: int) -> tuple[str, Optional[GroupElement]]:
    """Enumerate G against every contributing character.

    Returns the verdict and the first trivially acting non-identity element
    in lexicographic canonical order (None when faithful).
    """
    _check_nrd(n, r, d)
    if d**n > BRUTE_FORCE_LIMIT:
        raise UsageError(
            f"|G| = {d}^{n} exceeds {BRUTE_FORCE_LIMIT}; use the certificate mode instead"
        )
    chars = contributing_characters(n, r, d)
    if not chars:
        witness = GroupElement(d, (0,) * n + (1,))
        return NOT_FAITHFUL, witness
    witness = _first_trivially_acting(n, r, d, chars)
    return (FAITHFUL, None) if witness is None else (NOT_FAITHFUL, witness)


def permutation_witness(n: int, r: int, d: int, tau: Permutation) -> CharacterVec:
    """First contributing character (lexicographic) that tau moves.

    If every contributing chi satisfied chi^tau = chi, a monomial map with
    underlying permutation tau could act trivially; the returned character
    rules that out.
    """
    _check_nrd(n, r, d)
    tau = tuple(tau)
    if not is_permutation(tau, n + 1):
        raise UsageError(f"{tau} is not a permutation of {n + 1} letters")
    if tau == tuple(range(n + 1)):
        raise UsageError("tau must not be the identity")
    for chi in characters(n, d):
        if wedge_dimension(chi, n, r) and conjugate_character(chi, tau) != chi:
            return chi
    raise CertificateFailure(f"no contributing character is moved by {tau}")

