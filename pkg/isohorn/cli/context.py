"""Settings shared by every subcommand of one invocation."""

from dataclasses import dataclass
from typing import Any, Dict

from ..flags import Field
from ..models import ConfigManager


@dataclass
class RunContext:
    """Run-wide settings after config, environment and flags are merged."""
    config: ConfigManager

    @property
    def seed(self) -> int:
        return self.config.seed

    @property
    def trials(self) -> int:
        return self.config.trials

    @property
    def workers(self) -> int:
        return self.config.workers

    @property
    def field(self) -> Field:
        return Field(self.config.field_prime())

    def provenance(self, trials: bool = True) -> Dict[str, Any]:
        """Everything needed to reproduce a probabilistic verdict."""
        data = {"seed": self.seed, "field": self.field.describe(), "prime": self.config.field_prime()}
        if trials:
            data["trials"] = self.trials
        return data
