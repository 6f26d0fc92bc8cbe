# Suite registry and runner
#
# Checks are addressed by (suite, index) so that pool workers look them up
# after import instead of receiving closures.

import logging
import multiprocessing
import time

from rg_isogeny.checks import catalog, conjugation, hypergeom, lattice, modular, padehunt, rotabaxter
from rg_isogeny.constants import SUITES
from rg_isogeny.errors import BadConfig, UnknownSuite
from rg_isogeny.report import FAIL, CheckResult, SuiteReport

logger = logging.getLogger(__name__)

REGISTRY = {
    'rotabaxter': rotabaxter.CHECKS,
    'isogenies': catalog.CHECKS,
    'conjugation': conjugation.CHECKS,
    'padehunt': padehunt.CHECKS,
    'modular': modular.CHECKS,
    'lattice': lattice.CHECKS,
    'hypergeom': hypergeom.CHECKS,
}


def suite_names(name):
    if name == 'all':
        return list(SUITES)
    if name not in REGISTRY:
        raise UnknownSuite('unknown suite {!r}, expected one of {}'.format(name, ', '.join(SUITES + ['all'])))
    return [name]


def run_check(job):
    """ Pool worker: run one check and time it. A raising check is a failure. """
    suite, index, config = job
    check = REGISTRY[suite][index]
    start = time.perf_counter()
    try:
        status, witness = check.func(config)
    except BadConfig:
        raise
    except Exception as e:
        logger.warning('%s raised %s: %s', check.id, type(e).__name__, e)
        status, witness = FAIL, '{}: {}'.format(type(e).__name__, e)
    ms = (time.perf_counter() - start) * 1000
    if status == FAIL and witness is None:
        witness = 'no witness recorded'
    logger.debug('%s %s in %.1f ms', check.id, status, ms)
    return CheckResult(check.id, check.anchor, status, witness, round(ms, 1))


def _jobs(names, config):
    return [(name, index, config) for name in names for index in range(len(REGISTRY[name]))]


def parallel_call(jobs, processes):
    if processes == 1 or len(jobs) <= 1:
        return [run_check(job) for job in jobs]
    logger.info('running %d checks with %d processes', len(jobs), processes)
    with multiprocessing.Pool(processes) as pool:
        # map keeps the registry order
        return pool.map(run_check, jobs)


def run_suite(name, config):
    names = suite_names(name)
    jobs = _jobs(names, config)
    processes = config.jobs
    if processes is None:
        processes = min(len(jobs), multiprocessing.cpu_count())
    report = SuiteReport(names if name == 'all' else [name], config)
    report.extend(parallel_call(jobs, max(processes, 1)))
    failed = report.failed()
    if failed:
        logger.info('failing checks: %s', ', '.join(c.id for c in failed))
    return report
