"""Line-oriented session files: one ring, named ideals and modules, tasks.

One statement per line; `#` starts a comment and blank lines are skipped:

    ring x, y, z
    ideal a = x*y, x^2
    ideal I0 = 0
    module M = R / a
    module N = R
    task linkage check a b I0 over M

The ring line comes first.  Declared names share one namespace, must be
unique, and every reference must resolve to an earlier line.  Rendering is
canonical: parse-then-render is idempotent on its own output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .groebner import Ideal
from .modules import CyclicModule
from .ring import ParseError, RingCtx, RingError

__all__ = [
    "SessionError",
    "SessionTask",
    "SessionFile",
    "TASK_SHAPES",
    "parse_session",
    "parse_session_text",
    "render_session",
]


class SessionError(ParseError):
    """Session text rejected; the message names the offending line."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = {"R", "ring", "ideal", "module", "task", "over"}

# operand slots per task verb; "over" is the literal word followed by a
# module name and must close the statement
TASK_SHAPES: dict[str, tuple[str, ...]] = {
    "linkage check": ("ideal", "ideal", "ideal", "over"),
    "linkage link-of": ("ideal", "ideal", "over"),
    "gb": ("ideal",),
    "decompose": ("ideal",),
    "ass": ("ideal",),
    "minprimes": ("ideal",),
    "assh": ("ideal",),
    "radical": ("ideal",),
    "dim": ("ideal",),
    "depth": ("module",),
    "cm": ("module",),
    "equidim": ("module",),
    "grade": ("ideal", "over"),
    "att-top": ("ideal", "over"),
    "assf0": ("ideal", "over"),
}


@dataclass(frozen=True)
class SessionTask:
    op: str
    args: tuple[str, ...]
    over: str | None
    line: int = field(default=0, compare=False)

    def words(self) -> tuple[str, ...]:
        out = list(self.op.split())
        out.extend(self.args)
        if self.over is not None:
            out.extend(("over", self.over))
        return tuple(out)


@dataclass
class SessionFile:
    """A parsed session: every name resolved, modules already constructed."""

    ctx: RingCtx
    ideals: dict[str, Ideal]
    modules: dict[str, CyclicModule]
    module_defs: dict[str, str | None]
    tasks: tuple[SessionTask, ...]


def parse_session_text(text: str, source: str = "<session>") -> SessionFile:
    ctx: RingCtx | None = None
    ideals: dict[str, Ideal] = {}
    modules: dict[str, CyclicModule] = {}
    module_defs: dict[str, str | None] = {}
    tasks: list[SessionTask] = []

    def fail(lineno: int, msg: str):
        raise SessionError(f"{source}:{lineno}: {msg}")

    def declare(lineno: int, name: str) -> None:
        if not _NAME_RE.match(name):
            fail(lineno, f"bad name {name!r}")
        if name in _RESERVED:
            fail(lineno, f"name {name!r} is reserved")
        if name in ideals or name in modules:
            fail(lineno, f"name {name!r} already declared")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()

        if head == "ring":
            if ctx is not None:
                fail(lineno, "ring declared twice")
            if not rest:
                fail(lineno, "expected `ring NAME, NAME, ...`")
            try:
                ctx = RingCtx.parse(rest)
            except RingError as exc:
                fail(lineno, str(exc))
            continue

        if ctx is None:
            fail(lineno, "the ring declaration must come first")

        if head == "ideal":
            name, eq, gens = rest.partition("=")
            name = name.strip()
            if not eq or not gens.strip():
                fail(lineno, "expected `ideal NAME = generators`")
            declare(lineno, name)
            try:
                ideals[name] = Ideal.parse(ctx, gens)
            except RingError as exc:
                fail(lineno, str(exc))
            continue

        if head == "module":
            name, eq, body = rest.partition("=")
            name = name.strip()
            body = body.strip()
            if not eq or not body:
                fail(lineno, "expected `module NAME = R` or `module NAME = R / IDEAL`")
            declare(lineno, name)
            if body == "R":
                modules[name] = CyclicModule.full_ring(ctx)
                module_defs[name] = None
                continue
            base, slash, ref = body.partition("/")
            ref = ref.strip()
            if base.strip() != "R" or not slash or not ref:
                fail(lineno, "expected `module NAME = R` or `module NAME = R / IDEAL`")
            if ref not in ideals:
                fail(lineno, f"unknown ideal {ref!r}")
            try:
                modules[name] = CyclicModule(ctx, ideals[ref])
            except RingError as exc:
                fail(lineno, str(exc))
            module_defs[name] = ref
            continue

        if head == "task":
            words = rest.split()
            if not words:
                fail(lineno, "empty task")
            op = words[0]
            consumed = 1
            if op == "linkage":
                if len(words) < 2:
                    fail(lineno, "linkage task needs a verb (check, link-of)")
                op = f"linkage {words[1]}"
                consumed = 2
            shape = TASK_SHAPES.get(op)
            if shape is None:
                fail(lineno, f"unknown task {op!r}")
            operands = words[consumed:]
            args: list[str] = []
            over: str | None = None
            i = 0
            for slot in shape:
                if slot == "over":
                    if i + 2 != len(operands) or operands[i] != "over":
                        fail(lineno, f"task {op!r} must end with `over MODULE`")
                    over = operands[i + 1]
                    if over not in modules:
                        fail(lineno, f"unknown module {over!r}")
                    i += 2
                    continue
                if i >= len(operands) or operands[i] == "over":
                    fail(lineno, f"task {op!r} wants operands {shape}")
                name = operands[i]
                pool = ideals if slot == "ideal" else modules
                if name not in pool:
                    fail(lineno, f"unknown {slot} {name!r}")
                args.append(name)
                i += 1
            if i != len(operands):
                fail(lineno, "trailing words in task: " + " ".join(operands[i:]))
            tasks.append(SessionTask(op, tuple(args), over, lineno))
            continue

        fail(lineno, f"unknown statement {head!r}")

    if ctx is None:
        raise SessionError(f"{source}: no ring declaration")
    return SessionFile(ctx, ideals, modules, module_defs, tuple(tasks))


def parse_session(path: str) -> SessionFile:
    with open(path, encoding="utf-8") as fh:
        return parse_session_text(fh.read(), source=path)


def render_session(sf: SessionFile) -> str:
    """Canonical text for a session: ring, ideals, modules, tasks."""
    lines = ["ring " + ", ".join(sf.ctx.var_names)]
    if sf.ideals:
        lines.append("")
        for name, I in sf.ideals.items():
            lines.append(f"ideal {name} = " + ", ".join(str(g) for g in I.gens))
    if sf.modules:
        lines.append("")
        for name in sf.modules:
            ref = sf.module_defs[name]
            rhs = "R" if ref is None else f"R / {ref}"
            lines.append(f"module {name} = {rhs}")
    if sf.tasks:
        lines.append("")
        for task in sf.tasks:
            lines.append("task " + " ".join(task.words()))
    return "\n".join(lines) + "\n"
