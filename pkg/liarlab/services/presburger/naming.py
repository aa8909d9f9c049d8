"""The even/odd Gödel naming of Presburger formulas.

Formulas are named in enumeration order: a provable sentence takes the
smallest unused even number, anything else the smallest unused odd one. The
ledger only grows; a published assignment never changes.
"""

from __future__ import annotations

import logging
import threading
from typing import Callable, Iterator, Optional

from liarlab.errors import BudgetExceeded, NameUnassigned
from liarlab.services.presburger.syntax import PFormula, serialize

logger = logging.getLogger(__name__)


class NamingLedger:
    def __init__(
        self,
        formulas: Iterator[PFormula],
        provable: Callable[[PFormula], bool],
        cap: int = 0,
    ):
        self._source = formulas
        self._provable = provable
        self.cap = cap
        self.cursor = 0
        self.next_even = 0
        self.next_odd = 1
        self.forward: dict[str, int] = {}
        self.backward: dict[int, PFormula] = {}
        self.entries: list[tuple[int, str, int]] = []  # (index, text, name)
        # taken from the source but not yet recorded; survives a failed decision
        self._pending: Optional[PFormula] = None
        self._lock = threading.Lock()

    def _advance(self) -> None:
        if self.cap and self.cursor >= self.cap:
            raise BudgetExceeded("naming ledger", self.cap)
        if self._pending is None:
            self._pending = next(self._source)
        f = self._pending
        text = serialize(f)
        if self._provable(f):
            name = self.next_even
            self.next_even += 2
        else:
            name = self.next_odd
            self.next_odd += 2
        self.backward[name] = f
        self.forward[text] = name
        self.entries.append((self.cursor, text, name))
        self._pending = None
        self.cursor += 1
        if self.cursor % 1000 == 0:
            logger.debug("naming ledger at %d formulas", self.cursor)

    def advance_to(self, count: int) -> None:
        """Make sure the first ``count`` formulas are named."""
        with self._lock:
            while self.cursor < count:
                self._advance()

    def name_of(self, f: PFormula) -> int:
        text = serialize(f)
        name = self.forward.get(text)
        if name is not None:
            return name
        with self._lock:
            while text not in self.forward:
                self._advance()
            return self.forward[text]

    def formula_of(self, name: int, bound: Optional[int] = None) -> PFormula:
        f = self.backward.get(name)
        if f is not None:
            return f
        with self._lock:
            while name not in self.backward:
                if bound is not None and self.cursor >= bound:
                    raise NameUnassigned(name, bound)
                self._advance()
            return self.backward[name]
