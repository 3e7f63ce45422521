"""Published values of the projective and Krull dimension for fixed k and t."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .invariants import krull_formula, pd_formula


@dataclass(frozen=True)
class ReferenceTable:
    """Values of one invariant of ``R/I_{n,t}^{[k]}`` over a run of consecutive n."""

    invariant: str
    k: int
    t: int
    first_n: int
    values: Tuple[int, ...]

    @property
    def entries(self) -> Dict[int, int]:
        return {self.first_n + offset: v for offset, v in enumerate(self.values)}

    def mismatches(self) -> List[Tuple[int, int, int]]:
        """``(n, expected, computed)`` for every entry the closed form gets wrong."""
        formula: Callable[[int, int, int], int] = FORMULAS[self.invariant]
        out = []
        for n, expected in self.entries.items():
            computed = formula(n, self.k, self.t)
            if computed != expected:
                out.append((n, expected, computed))
        return out


FORMULAS: Dict[str, Callable[[int, int, int], int]] = {
    "pd": pd_formula,
    "krull": krull_formula,
}

PD_K3_T4 = ReferenceTable("pd", 3, 4, 12, (1, 2, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 7, 8, 8, 8, 8, 9))
PD_K4_T3 = ReferenceTable("pd", 4, 3, 12, (1, 2, 3, 4, 5, 5, 5, 6, 7, 7, 7, 8, 9, 9, 9, 10))
KRULL_K2_T2 = ReferenceTable(
    "krull", 2, 2, 4, (3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11)
)
KRULL_K3_T5 = ReferenceTable(
    "krull", 3, 5, 15, (14, 15, 16, 17, 18, 18, 19, 20, 21, 22, 22, 23, 24, 25, 26)
)

REFERENCE_TABLES = (PD_K3_T4, PD_K4_T3, KRULL_K2_T2, KRULL_K3_T5)
