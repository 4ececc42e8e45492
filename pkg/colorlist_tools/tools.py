import os
from pathlib import Path
from configparser import ConfigParser
from warnings import warn

BUDGET_ENV_VAR = "COLORLIST_BUDGET"

class BudgetExceededError(RuntimeError):
  """
  Raised when an enumeration would examine more assignments than the configured budget allows.

  Attributes:
    required (int): The exact number of assignments the run would examine.
    budget (int): The cap that was in force.
  """
  def __init__(self, required:int, budget:int, what:str="assignments"):
    self.required = required
    self.budget = budget
    super().__init__(
      f"Refusing to enumerate {required} {what}: the work budget is {budget}. "
      f"Raise the budget (--budget or {BUDGET_ENV_VAR}) or force the run."
    )

# Config

def load_config(user_config_path=None) -> ConfigParser:
  config = ConfigParser()

  # Load default config from package
  default_config_path = Path(__file__).parent.absolute() / "config.toml"
  config.read(default_config_path)

  # If user supplied a config file, load it next (it overrides defaults)
  if user_config_path and os.path.exists(user_config_path):
    config.read(user_config_path)

  return config

def override_config_value(config:ConfigParser, section:str, key:str, value):
  if not config.has_section(section):
    config.add_section(section)
  config.set(section, key, str(value))

def _as_int(value, source:str) -> int:
  try:
    return int(str(value).replace("_", "").strip())
  except ValueError:
    raise ValueError(f"Budget from {source} must be an integer, got {value!r}")

def get_budget(config:ConfigParser=None, override:int|str|None=None) -> int:
  """
  Resolves the assignment budget. Precedence: explicit override, then the COLORLIST_BUDGET environment
  variable, then [budget] max_assignments from config.

  :param config: A loaded config. If None, the packaged defaults are used.
  :type config: configparser.ConfigParser

  :param override: A value supplied directly, e.g. from a --budget flag. Default: None.
  :type override: int | str | None

  :return: int
  """
  if override is not None:
    return _as_int(override, "override")
  env_value = os.environ.get(BUDGET_ENV_VAR)
  if env_value:
    return _as_int(env_value, BUDGET_ENV_VAR)
  if config is None:
    config = load_config()
  return _as_int(config.get("budget", "max_assignments", fallback="100000000"), "config")

def check_budget(required:int, budget:int, force:bool=False, what:str="assignments"):
  """
  Refuses a run whose exact work count exceeds budget, unless forced. Counts are Python ints,
  so the comparison never overflows.

  :param required: Number of units the run would examine.
  :type required: int

  :param budget: The cap.
  :type budget: int

  :param force: Continue with a warning instead of refusing. Default: False.
  :type force: bool
  """
  if required <= budget:
    return
  if not force:
    raise BudgetExceededError(required, budget, what)
  warn(f"Enumerating {required} {what} exceeds the budget of {budget}; continuing because force=True.", RuntimeWarning)

# Utility functions

def chunk_ranges(total:int, chunks:int) -> list[tuple[int, int]]:
  """
  Splits the index range [0, total) into at most `chunks` contiguous, ordered, non-empty ranges.

  :return: list of (start, stop) tuples.
  """
  if total <= 0:
    return []
  chunks = max(1, min(chunks, total))
  size = -(-total // chunks)
  return [(start, min(start + size, total)) for start in range(0, total, size)]

def positive_int(value:str) -> int:
  """
  argparse type for strictly positive integers.
  """
  number = int(value)
  if number < 1:
    raise ValueError(f"expected a positive integer, got {value}")
  return number
