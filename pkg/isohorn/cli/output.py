"""Command results and their rendering.

A rendered result is a block of "key: value" lines followed by one JSON
document. Nothing time- or host-dependent goes into it, so equal inputs
and seeds give byte-identical output.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

logger = logging.getLogger("IsoHorn")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def plain(value: Any, exact: bool = True) -> Any:
    """JSON-compatible copy of value; integers become decimal strings when exact."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if exact else value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v, exact) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [plain(v, exact) for v in items]
    if hasattr(value, "as_dict"):
        return plain(value.as_dict(), exact)
    return str(value)


@dataclass
class CommandResult:
    """Outcome of one subcommand.

    Attributes:
        command: Subcommand name
        params: Echoed parameters
        verdict: True / False for checks and predicates, None for pure computations
        values: Computed payload
        provenance: Seed, prime and trial count where randomness is involved
        predicate: Render the verdict as true/false instead of PASS/FAIL
        error: Diagnostic when the command did not complete
        inconsistent: The error was a violated identity rather than bad input
    """
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[bool] = None
    values: Dict[str, Any] = field(default_factory=dict)
    provenance: Dict[str, Any] = field(default_factory=dict)
    predicate: bool = False
    error: Optional[str] = None
    inconsistent: bool = False

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_FAIL if self.inconsistent else EXIT_USAGE
        return EXIT_FAIL if self.verdict is False else EXIT_OK

    @property
    def verdict_label(self) -> str:
        if self.error is not None:
            return "INCONSISTENT" if self.inconsistent else "ERROR"
        if self.verdict is None:
            return "DONE"
        if self.predicate:
            return "true" if self.verdict else "false"
        return "PASS" if self.verdict else "FAIL"

    def as_dict(self) -> Dict[str, Any]:
        document = {
            "command": self.command,
            "params": plain(self.params, exact=False),
            "verdict": self.verdict_label,
            "values": plain(self.values),
            "provenance": plain(self.provenance, exact=False),
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            document["error"] = self.error
        return document

    def render(self) -> str:
        lines = [f"command: {self.command}", f"verdict: {self.verdict_label}"]
        for key in sorted(self.values):
            value = self.values[key]
            if isinstance(value, (bool, int, str, Fraction)) or value is None:
                lines.append(f"{key}: {plain(value)}")
        for key in sorted(self.provenance):
            lines.append(f"{key}: {self.provenance[key]}")
        if self.error is not None:
            lines.append(f"error: {self.error}")
        lines.append(json.dumps(self.as_dict(), sort_keys=True, indent=2))
        return "\n".join(lines) + "\n"


def write_result(result: CommandResult, path: str) -> None:
    """Write the JSON document of result to path."""
    try:
        with open(path, "w") as handle:
            json.dump(result.as_dict(), handle, sort_keys=True, indent=2)
            handle.write("\n")
        logger.info(f"Result written to {path}")
    except (IOError, OSError) as e:
        logger.error(f"Error writing result to {path}: {e}")
        raise
