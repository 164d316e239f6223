"""Deciding whether a word represents the identity.

The decision recursion: reduce; odd a-parity is never trivial; the
empty word is trivial; a single remaining letter is not (the generators
are nontrivial automorphisms).  Otherwise rotate into cyclic normal
form, take the two sections and recurse on both.  Section lengths are
at most half the input (after normalization the word starts with 'a'),
so the recursion tree has height about log2 of the word length and
total size linear in it.

build_wp_tree records that recursion explicitly, breadth first,
stopping at the first "no" leaf just like the decision procedure.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .splitting import split
from .words import a_parity, cyclic_normalize, display, inverse, reduce_word


def is_trivial(word: str) -> bool:
    return _trivial_reduced(reduce_word(word))


def _trivial_reduced(w: str) -> bool:
    while True:
        if a_parity(w) != 0:
            return False
        if not w:
            return True
        if len(w) == 1:
            return False
        w, _ = cyclic_normalize(w)
        if len(w) <= 1:
            # a rotation strictly shortened the word; re-dispatch
            continue
        w0, w1 = split(w)
        if not _trivial_reduced(w0):
            return False
        w = w1


def equal(u: str, v: str) -> bool:
    """Whether two words represent the same element."""
    return is_trivial(reduce_word(reduce_word(u) + inverse(reduce_word(v))))


@dataclass
class WpNode:
    """Node of the explicit decision tree.  mark is "yes", "no", or None
    for an inner node whose answer is the conjunction of its children."""
    word: str
    mark: str | None = None
    children: list["WpNode"] = field(default_factory=list)

    def height(self) -> int:
        if not self.children:
            return 0
        return 1 + max(child.height() for child in self.children)

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)

    def to_dict(self) -> dict:
        return {
            "word": display(self.word),
            "mark": self.mark,
            "children": [child.to_dict() for child in self.children],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph wp {", '  node [shape=box, fontname="monospace"];']
        counter = [0]

        def visit(node: WpNode) -> int:
            idx = counter[0]
            counter[0] += 1
            label = display(node.word)
            if node.mark is not None:
                label += f"\\n[{node.mark}]"
            lines.append(f'  n{idx} [label="{label}"];')
            for child in node.children:
                cidx = visit(child)
                lines.append(f"  n{idx} -> n{cidx};")
            return idx

        visit(self)
        lines.append("}")
        return "\n".join(lines)


def build_wp_tree(word: str) -> WpNode:
    """Explicit decision tree for the triviality check, built breadth
    first with the same early exit on the first "no" leaf."""
    root = WpNode(reduce_word(word))
    queue = deque([root])
    while queue:
        node = queue.popleft()
        w = node.word
        if a_parity(w) != 0:
            node.mark = "no"
            break
        if not w:
            node.mark = "yes"
            continue
        if len(w) == 1:
            node.mark = "no"
            break
        normalized, _ = cyclic_normalize(w)
        if len(normalized) <= 1:
            # rotation alone settled this node's word
            node.mark = "yes" if not normalized else "no"
            if node.mark == "no":
                break
            continue
        w0, w1 = split(normalized)
        node.children = [WpNode(w0), WpNode(w1)]
        queue.extend(node.children)
    return root


def tree_answer(root: WpNode) -> bool:
    """Decision recorded by an explicit tree: false iff a "no" leaf exists."""
    stack = [root]
    while stack:
        node = stack.pop()
        if node.mark == "no":
            return False
        stack.extend(node.children)
    return True
