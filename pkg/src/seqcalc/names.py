"""Bidirectional mapping between surface names and numeric identifiers.

Functions and predicates live in separate namespaces.  Ids are assigned
densely from 0 in order of first use, so re-parsing printed output always
reproduces the same map.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class MissingNameError(KeyError):
    """Raised when printing an id that has no assigned name."""


@dataclass
class NameMap:
    functions: dict[str, int] = field(default_factory=dict)
    predicates: dict[str, int] = field(default_factory=dict)

    def fun_id(self, name: str) -> int:
        """Id for a function name, assigning the next free id on first use."""
        if name not in self.functions:
            self.functions[name] = len(self.functions)
        return self.functions[name]

    def pred_id(self, name: str) -> int:
        if name not in self.predicates:
            self.predicates[name] = len(self.predicates)
        return self.predicates[name]

    def fun_name(self, i: int) -> str:
        for name, j in self.functions.items():
            if j == i:
                return name
        raise MissingNameError(f"no name for function id {i}")

    def pred_name(self, i: int) -> str:
        for name, j in self.predicates.items():
            if j == i:
                return name
        raise MissingNameError(f"no name for predicate id {i}")

    def all_names(self) -> frozenset[str]:
        return frozenset(self.functions) | frozenset(self.predicates)

    def copy(self) -> NameMap:
        return NameMap(dict(self.functions), dict(self.predicates))
