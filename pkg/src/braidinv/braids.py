"""Braid words in the Artin generators and the permutations of their closures.

Letters are nonzero integers: +i crosses the strands in positions i and i+1
with the strand arriving in position i+1 passing over the one in position i,
and -i is the inverse crossing (the position-i strand on top).  Words act top
to bottom, letters left to right.  All values are immutable.
"""

import dataclasses

__all__ = [
    "BraidParseError",
    "BraidWord",
    "Permutation",
    "closure_components",
    "free_reduce",
    "inverse",
    "mirror",
    "parse_braid_word",
    "permutation",
    "power",
]


class BraidParseError(ValueError):
    """Malformed braid-word text; `token` and `position` (1-based) name the culprit."""

    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        super().__init__(message)
        self.token = token
        self.position = position


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on `strands` strands."""

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(
                    f"letter {letter} is not a generator index for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Bijection of {1..k}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite applying self first, then `other`."""
        if other.degree() != self.degree():
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            raise ValueError(f"power must be nonnegative, got {n}")
        result = Permutation.identity(self.degree())
        step = self
        while n:
            if n & 1:
                result = result.then(step)
            step = step.then(step)
            n >>= 1
        return result

    def cycle_count(self) -> int:
        seen = [False] * len(self.images)
        count = 0
        for start in range(len(self.images)):
            if seen[start]:
                continue
            count += 1
            point = start
            while not seen[point]:
                seen[point] = True
                point = self.images[point] - 1
        return count

    def is_identity(self) -> bool:
        return all(image == i + 1 for i, image in enumerate(self.images))


def parse_braid_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed generator indices into a braid word.

    A `#` starts a comment running to the end of its line.  With `strands`
    omitted the count is inferred as max|letter| + 1 (1 for the empty word).

    Raises:
        BraidParseError: on a non-integer token, a zero, or a generator index
            needing more strands than declared; the error names the offending
            token and its 1-based position.
    """
    if strands is not None and strands < 1:
        raise ValueError(f"strand count must be positive, got {strands}")
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    letters = []
    for position, token in enumerate(stripped.split(), start=1):
        try:
            letter = int(token)
        except ValueError:
            raise BraidParseError(
                f"token {token!r} at position {position} is not an integer",
                token,
                position,
            ) from None
        if letter == 0:
            raise BraidParseError(
                f"token '0' at position {position}: zero is not a generator index",
                token,
                position,
            )
        if strands is not None and abs(letter) > strands - 1:
            raise BraidParseError(
                f"token {token!r} at position {position}: generator index {abs(letter)}"
                f" needs at least {abs(letter) + 1} strands, have {strands}",
                token,
                position,
            )
        letters.append(letter)
    if strands is None:
        strands = max((abs(letter) for letter in letters), default=0) + 1
    return BraidWord(tuple(letters), strands)


def power(w: BraidWord, n: int) -> BraidWord:
    """The word repeated n times (n = 0 gives the empty word on the same strands)."""
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")
    return BraidWord(w.letters * n, w.strands)


def inverse(w: BraidWord) -> BraidWord:
    """Reversed word with every letter negated."""
    return BraidWord(tuple(-letter for letter in reversed(w.letters)), w.strands)


def mirror(w: BraidWord) -> BraidWord:
    """Every letter negated in place; the closure becomes its mirror image."""
    return BraidWord(tuple(-letter for letter in w.letters), w.strands)


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs until none remain.

    The result does not depend on the order of deletions, so a single
    stack pass suffices.
    """
    stack: list[int] = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(tuple(stack), w.strands)


def permutation(w: BraidWord) -> Permutation:
    """Strand permutation of the braid: top position to bottom position."""
    # col_to_strand[c-1] holds the strand currently occupying position c.
    col_to_strand = list(range(1, w.strands + 1))
    for letter in w.letters:
        i = abs(letter)
        col_to_strand[i - 1], col_to_strand[i] = col_to_strand[i], col_to_strand[i - 1]
    images = [0] * w.strands
    for col, strand in enumerate(col_to_strand, start=1):
        images[strand - 1] = col
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    """Number of circles in the closure of `w` (a knot exactly when this is 1)."""
    return permutation(w).cycle_count()
