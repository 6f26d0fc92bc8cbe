# Run configuration: defaults from constants.py, overridden by the
# RG_ISOGENY_* environment variables and then by command line flags.

import logging
import os
from dataclasses import asdict, dataclass, replace

from rg_isogeny.constants import DEFAULT_DEGREE_CAP, DEFAULT_DIGITS, DEFAULT_ORDER, DIGITS_CAP
from rg_isogeny.errors import BadConfig

logger = logging.getLogger(__name__)

ENV_PREFIX = 'RG_ISOGENY_'


def _env_int(name, default):
    value = os.environ.get(ENV_PREFIX + name, None)
    if value is None or value == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise BadConfig('{}{} must be an integer, got {!r}'.format(ENV_PREFIX, name, value))


def parse_jobs(value):
    """ 'auto' (None) or a positive integer. """
    if value is None or str(value).lower() == 'auto':
        return None
    try:
        jobs = int(value)
    except ValueError:
        raise BadConfig('jobs must be an integer or "auto", got {!r}'.format(value))
    if jobs < 1:
        raise BadConfig('jobs must be positive, got {}'.format(jobs))
    return jobs


@dataclass(frozen=True)
class RunConfig:
    order: int = DEFAULT_ORDER
    digits: int = DEFAULT_DIGITS
    degree_cap: int = DEFAULT_DEGREE_CAP
    jobs: object = None
    json: bool = False

    def __post_init__(self):
        if self.order < 2:
            raise BadConfig('order must be at least 2, got {}'.format(self.order))
        if not 10 <= self.digits <= DIGITS_CAP:
            raise BadConfig('digits must lie in [10, {}], got {}'.format(DIGITS_CAP, self.digits))
        if self.degree_cap < 1:
            raise BadConfig('degree cap must be positive, got {}'.format(self.degree_cap))
        if self.jobs is not None:
            parse_jobs(self.jobs)

    @classmethod
    def from_env(cls):
        jobs = os.environ.get(ENV_PREFIX + 'JOBS', None)
        return cls(order=_env_int('ORDER', DEFAULT_ORDER),
                   digits=_env_int('DIGITS', DEFAULT_DIGITS),
                   degree_cap=_env_int('DEGREE_CAP', DEFAULT_DEGREE_CAP),
                   jobs=parse_jobs(jobs) if jobs else None)

    def override(self, **flags):
        """ Copy with every flag that is not None applied. """
        changes = {k: v for k, v in flags.items() if v is not None}
        if changes:
            logger.debug('configuration overrides: %s', changes)
        return replace(self, **changes)

    def snapshot(self):
        data = asdict(self)
        data['jobs'] = 'auto' if self.jobs is None else self.jobs
        del data['json']
        return data


def log_level_from_env(default='WARNING'):
    name = os.environ.get(ENV_PREFIX + 'LOG_LEVEL', default).upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise BadConfig('unknown log level {!r}'.format(name))
    return level
