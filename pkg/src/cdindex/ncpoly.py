"""
Exact integer polynomials in the noncommuting variables A, D and c, d.

Monomials are plain strings over the alphabet {A, D} or {c, d}; the empty
string is the constant monomial (printed and parsed as "1").  Grading gives
A, D and c degree 1 and d degree 2.  Substituting c = A + D, d = AD + DA
embeds the cd-polynomials into the AD-polynomials; the image is exactly the
polynomials fixed by the bar involution that swaps A and D, and on that
image the substitution is inverted by `ad_to_cd`.

The number of cd-monomials of degree n is the Fibonacci number F(n+1)
(1, 1, 2, 3, 5, 8, ...), which sizes the linear systems the conversions
solve.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

from .errors import InconsistentExpansionError, NotDecomposableError, NotInSubringError
from .linalg import solve_int_columns

_BAR = str.maketrans("AD", "DA")


class _WordPolynomial:
    """Immutable integer linear combination of words over a fixed alphabet."""

    __slots__ = ("_terms",)
    alphabet = ""

    def __init__(self, terms: Union[Mapping[str, int], Iterable[tuple[str, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = {}
        for word, coeff in items:
            if any(ch not in self.alphabet for ch in word):
                raise ValueError(
                    f"monomial {word!r} not over alphabet {self.alphabet!r}"
                )
            if coeff:
                acc[word] = acc.get(word, 0) + coeff
        self._terms = {w: c for w, c in acc.items() if c}

    def coefficient(self, word: str) -> int:
        return self._terms.get(word, 0)

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(sorted(self._terms.items()))

    def monomials(self) -> list[str]:
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self):
        return hash((type(self), tuple(sorted(self._terms.items()))))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return type(self)(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) - c
        return type(self)(acc)

    def __neg__(self):
        return type(self)({w: -c for w, c in self._terms.items()})

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)({w: scalar * c for w, c in self._terms.items()})

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc: dict[str, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        return type(self)(acc)

    def word_degree(self, word: str) -> int:
        return len(word)

    def degrees(self) -> set[int]:
        return {self.word_degree(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or mixed-degree")
        return degs.pop()

    def homogeneous_part(self, n: int):
        return type(self)(
            {w: c for w, c in self._terms.items() if self.word_degree(w) == n}
        )

    def to_json(self) -> dict[str, int]:
        """Map monomial -> coefficient, the empty monomial spelled "1"."""
        return {(w or "1"): c for w, c in sorted(self._terms.items())}

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(
            self._terms.items(), key=lambda wc: (self.word_degree(wc[0]), wc[0])
        ):
            word = w or "1"
            if c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts).replace("+ -", "- ")


class ADPolynomial(_WordPolynomial):
    """Integer polynomial in the noncommuting variables A and D."""

    alphabet = "AD"


class CDPolynomial(_WordPolynomial):
    """Integer polynomial in the noncommuting variables c (degree 1) and d (degree 2)."""

    alphabet = "cd"

    def word_degree(self, word: str) -> int:
        return cd_degree(word)


def cd_degree(monomial: str) -> int:
    """Graded degree of a cd-monomial: #c + 2 * #d."""
    return len(monomial) + monomial.count("d")


def parse_cd_monomial(text: str) -> str:
    """Parse a cd-monomial string; "1" (or "") is the constant monomial.

    >>> parse_cd_monomial("ccd")
    'ccd'
    >>> parse_cd_monomial("1")
    ''
    """
    if text in ("1", ""):
        return ""
    if any(ch not in "cd" for ch in text):
        raise ValueError(f"not a cd-monomial: {text!r}")
    return text


def cd_monomials(n: int) -> list[str]:
    """All cd-monomials of graded degree n, lexicographically (c before d).

    >>> cd_monomials(3)
    ['ccc', 'cd', 'dc']
    >>> [len(cd_monomials(k)) for k in range(7)]
    [1, 1, 2, 3, 5, 8, 13]
    """
    if n < 0:
        return []
    if n == 0:
        return [""]
    out = ["c" + m for m in cd_monomials(n - 1)]
    if n >= 2:
        out += ["d" + m for m in cd_monomials(n - 2)]
    return sorted(out)


def ad_monomials(n: int) -> list[str]:
    """All 2^n AD-words of length n, lexicographically."""
    if n < 0:
        return []
    words = [""]
    for _ in range(n):
        words = [w + ch for w in words for ch in "AD"]
    return sorted(words)


def ad_form(monomial: str) -> str:
    """AD-word of a cd-monomial under c -> A, d -> DA.

    The image words are exactly those in which every D is followed by an A,
    and the map is a bijection onto them.

    >>> ad_form("d"), ad_form("dd"), ad_form("cd")
    ('DA', 'DADA', 'ADA')
    """
    return "".join("A" if ch == "c" else "DA" for ch in monomial)


def expand_cd(p: CDPolynomial) -> ADPolynomial:
    """Ring homomorphism c -> A + D, d -> AD + DA.

    >>> expand_cd(CDPolynomial({"c": 1}))
    A + D
    """
    acc: dict[str, int] = {}
    for mon, coeff in p.items():
        words = {"": coeff}
        for ch in mon:
            nxt: dict[str, int] = {}
            choices = ("A", "D") if ch == "c" else ("AD", "DA")
            for w, c in words.items():
                for suffix in choices:
                    nxt[w + suffix] = nxt.get(w + suffix, 0) + c
            words = nxt
        for w, c in words.items():
            acc[w] = acc.get(w, 0) + c
    return ADPolynomial(acc)


def bar(p: ADPolynomial) -> ADPolynomial:
    """The involution swapping A and D in every monomial."""
    return ADPolynomial({w.translate(_BAR): c for w, c in p.items()})


def ad_to_cd(p: ADPolynomial) -> CDPolynomial:
    """Inverse of expand_cd on its image, degree by degree.

    Each homogeneous part is solved exactly as an integer linear system over
    the cd-monomial basis of its degree; a nonzero residual raises
    NotInSubringError.

    >>> ad_to_cd(ADPolynomial({"A": 1, "D": 1}))
    c
    """
    result: dict[str, int] = {}
    for n in sorted(p.degrees()):
        part = p.homogeneous_part(n)
        basis = cd_monomials(n)
        columns = [dict(expand_cd(CDPolynomial({m: 1})).items()) for m in basis]
        solution = solve_int_columns(columns, dict(part.items()))
        if solution is None:
            raise NotInSubringError(
                f"degree-{n} part is not a polynomial in c and d: {part!r}"
            )
        for m, coeff in zip(basis, solution):
            if coeff:
                result[m] = coeff
    return CDPolynomial(result)


def _strip_last(p: ADPolynomial, letter: str) -> ADPolynomial:
    """Sum of monomials of p ending in `letter`, with that letter removed."""
    return ADPolynomial(
        {w[:-1]: c for w, c in p.items() if w.endswith(letter)}
    )


def _strip_first(p: ADPolynomial, letter: str) -> ADPolynomial:
    return ADPolynomial(
        {w[1:]: c for w, c in p.items() if w.startswith(letter)}
    )


def _append(p: ADPolynomial, word: str) -> ADPolynomial:
    return ADPolynomial({w + word: c for w, c in p.items()})


def _prepend(word: str, p: ADPolynomial) -> ADPolynomial:
    return ADPolynomial({word + w: c for w, c in p.items()})


def _recover_two_term(p: ADPolynomial) -> tuple[ADPolynomial, ADPolynomial]:
    """Split p = F + G*D with F, G expansions of cd-polynomials.

    G is recovered from p - bar(p) = G*(D - A); what remains must be
    bar-invariant.  Returns the *expanded* (F, G); raises
    InconsistentExpansionError if the split does not exist.
    """
    diff = p - bar(p)
    g = _strip_last(diff, "D")
    if _strip_last(diff, "A") + g:  # the A-ending half must be exactly -G*A
        raise InconsistentExpansionError("no two-term split: G*(D-A) shape fails")
    f = p - _append(g, "D")
    if f != bar(f):
        raise InconsistentExpansionError("no two-term split: remainder not bar-invariant")
    return f, g


def _expanded_to_cd(p: ADPolynomial) -> CDPolynomial:
    """Convert an expanded cd-polynomial back to c, d by peeling last letters.

    Splitting the claimed expansion of Q*c + R*d by final letter gives
    strip_A(p) = Q + R*D, a two-term shape from which R and Q are recovered;
    recursion on their (strictly smaller) degrees finishes the job.  Used by
    the D-power expansion, which needs a solver-free route.
    """
    if not p:
        return CDPolynomial()
    n = p.degree()
    if n == 0:
        return CDPolynomial({"": p.coefficient("")})
    u = _strip_last(p, "A")
    f, g = _recover_two_term(u)
    q_cd = _expanded_to_cd(f)
    r_cd = _expanded_to_cd(g)
    rebuilt = ADPolynomial()
    for part, letters in ((f, ("A", "D")), (g, ("AD", "DA"))):
        for suffix in letters:
            rebuilt = rebuilt + _append(part, suffix)
    if rebuilt != p:
        raise InconsistentExpansionError("not the expansion of a cd-polynomial")
    return CDPolynomial(
        {m + "c": c for m, c in q_cd.items()}
    ) + CDPolynomial({m + "d": c for m, c in r_cd.items()})


def d_power_expansion(p: ADPolynomial, n: int) -> tuple[CDPolynomial, ...]:
    """Expansion p = f_n + f_{n-1} D + f_{n-2} D^2 + ... + f_0 D^n.

    p must be homogeneous of degree n.  The f_i are cd-polynomials of degree
    i and the expansion, when it exists, is unique; each level is peeled off
    with the two-term bar recovery.  Not every AD-polynomial admits one
    (already in degree 3 the candidate monomials span a proper subspace), in
    which case InconsistentExpansionError is raised.

    >>> d_power_expansion(ADPolynomial({"D": 1}), 1)
    (0, 1)
    """
    if p and (not p.is_homogeneous() or p.degree() != n):
        raise ValueError(f"polynomial is not homogeneous of degree {n}")
    fs: list[CDPolynomial] = []
    rest = p
    for m in range(n, -1, -1):
        if not rest:
            fs.append(CDPolynomial())
            continue
        if m == 0:
            fs.append(CDPolynomial({"": rest.coefficient("")}))
            rest = rest - ADPolynomial({"": rest.coefficient("")})
            break
        u = _strip_last(rest, "A")
        f_exp, g_exp = _recover_two_term(u)
        f_m_expanded = (
            _append(f_exp, "A")
            + _append(f_exp, "D")
            + _append(g_exp, "AD")
            + _append(g_exp, "DA")
        )
        fs.append(_expanded_to_cd(f_m_expanded))
        rest = rest - f_m_expanded
        if _strip_last(rest, "A"):
            raise InconsistentExpansionError(
                "no D-power expansion: residue has monomials not ending in D"
            )
        rest = _strip_last(rest, "D")
    if rest:
        raise InconsistentExpansionError("no D-power expansion: nonzero residue")
    return tuple(fs)


def assemble_d_power(fs: Iterable[CDPolynomial]) -> ADPolynomial:
    """Inverse of d_power_expansion: sum of expand_cd(f_i) * D^k."""
    acc = ADPolynomial()
    for k, f in enumerate(fs):
        acc = acc + _append(expand_cd(f), "D" * k)
    return acc


def decompose_left_a(p: ADPolynomial, n: int) -> tuple[CDPolynomial, CDPolynomial]:
    """Split p = f + A*g with f, g cd-polynomials of degrees n, n-1.

    g is recovered from p - bar(p) = A*g' - D*g' by stripping first letters;
    both halves then go through the exact cd conversion.  Raises
    NotDecomposableError when no such split exists; when it exists it is
    unique.

    >>> decompose_left_a(ADPolynomial({"AA": 1, "AD": 1}), 2)
    (0, c)
    """
    if p and (not p.is_homogeneous() or p.degree() != n):
        raise ValueError(f"polynomial is not homogeneous of degree {n}")
    diff = p - bar(p)
    g_exp = _strip_first(diff, "A")
    if _strip_first(diff, "D") + g_exp:  # D-starting half must be exactly -g
        raise NotDecomposableError("no f + A*g split: A*g - D*g shape fails")
    f_exp = p - _prepend("A", g_exp)
    try:
        f = ad_to_cd(f_exp) if f_exp else CDPolynomial()
        g = ad_to_cd(g_exp) if g_exp else CDPolynomial()
    except NotInSubringError as exc:
        raise NotDecomposableError(f"no f + A*g split: {exc}") from exc
    return f, g


if __name__ == "__main__":
    import doctest

    doctest.testmod()
