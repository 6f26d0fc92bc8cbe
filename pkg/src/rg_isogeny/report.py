# Check results and suite reports
#
# Every check function returns an Outcome; the suite runner adds the check id,
# anchor and timing to form a CheckResult.

import json
from collections import namedtuple

PASS = 'pass'
FAIL = 'fail'
REPORT = 'report'

STATUSES = [PASS, FAIL, REPORT]

Outcome = namedtuple('Outcome', ['status', 'witness'])

Check = namedtuple('Check', ['id', 'anchor', 'func'])

CheckResult = namedtuple('CheckResult', ['id', 'anchor', 'status', 'witness', 'ms'])


def outcome(ok, witness=None):
    return Outcome(PASS if ok else FAIL, witness)


def reported(witness):
    """ A discrepancy with the printed formula that is recorded, not failed. """
    return Outcome(REPORT, witness)


def _plain(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


class SuiteReport(object):

    def __init__(self, suites, config):
        self.suites = list(suites)
        self.config = config
        self.checks = []

    def add(self, result):
        self.checks.append(result)

    def extend(self, results):
        self.checks.extend(results)

    def count(self, status):
        return sum(1 for c in self.checks if c.status == status)

    def summary(self):
        return {status: self.count(status) for status in STATUSES}

    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    def exit_code(self):
        return 1 if self.failed() else 0

    def to_json(self):
        return {'suite': self.suites[0] if len(self.suites) == 1 else self.suites,
                'checks': [{'id': c.id, 'anchor': c.anchor, 'status': c.status,
                            'witness': _plain(c.witness), 'ms': c.ms} for c in self.checks],
                'config': self.config.snapshot(),
                'summary': self.summary()}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    def to_text(self):
        lines = []
        width = max([len(c.id) for c in self.checks] + [10])
        for c in self.checks:
            line = '{:<6} {:<{width}} {:>8.1f} ms'.format(c.status.upper(), c.id, c.ms, width=width)
            if c.status != PASS and c.witness is not None:
                line += '  ' + str(_plain(c.witness))
            lines.append(line)
        s = self.summary()
        lines.append('{} passed, {} failed, {} reported'.format(s[PASS], s[FAIL], s[REPORT]))
        return '\n'.join(lines)
