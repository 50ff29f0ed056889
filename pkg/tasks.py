"""Invoke tasks for checking scckit.

Run ``invoke check`` before submitting a pull request, it must pass
cleanly.
"""

import os
import sys
import xml.etree.ElementTree as etree

import invoke


#: Coverage below this line-rate fails the pytest task.
MIN_COVERAGE = 0.95

#: Targets linted one by one, so each gets its own report section.
PYLINT_TARGETS = [
    'scckit',
    'tests/*.py tests/commands/*.py',
    'setup.py tasks.py',
]


@invoke.task
def pylint(ctx):
    """Lint the package, the tests and the build scripts."""
    ctx.run('mkdir -p results && : > results/pylint.log')
    pylint_bin = os.path.join(sys.prefix, 'bin', 'pylint')
    worst = 0
    for target in PYLINT_TARGETS:
        res = ctx.run('{} -f parseable {} | tee -a results/pylint.log; '
                      'exit ${{PIPESTATUS[0]}}'.format(pylint_bin, target),
                      warn=True)
        worst = max(worst, res.exited)
    if worst:
        raise invoke.Exit(code=worst)


@invoke.task(help={'corpus_size': 'Graphs per generator family, '
                                  'default 40'})
def pytest(ctx, corpus_size=None):
    """Run the test suite and enforce the coverage minimum."""
    args = ['py.test', '-q', '-m "not slow"',
            '--cov-report=xml:results/coverage.xml']
    if corpus_size:
        args.append('--corpus-size={:d}'.format(int(corpus_size)))
    ctx.run(' '.join(args + ['tests']))
    rate = float(etree.parse('results/coverage.xml')
                 .getroot().get('line-rate', 0))
    print('Test coverage: {:.0%}'.format(rate))
    if rate < MIN_COVERAGE:
        raise invoke.Exit('Coverage below {:.0%}'.format(MIN_COVERAGE),
                          code=1)


@invoke.task
def jenkins_pytest(ctx):
    """Run the tests on CI, with the large graph corpus and slow tests."""
    res = ctx.run(' '.join([
        os.path.join(sys.prefix, 'bin', 'py.test'),
        '-v',
        '--corpus-size=1000',
        '--junitxml=results/test_results.xml',
        '--cov-report term-missing',
        '--cov-report xml:results/coverage.xml',
    ]))
    if res.exited:
        raise invoke.Exit(code=res.exited)


@invoke.task(pre=[pylint, pytest])
def check(ctx):  # pylint: disable=unused-argument
    """Run all checks."""


# pylint: disable=invalid-name
namespace = invoke.Collection.from_module(sys.modules[__name__])
namespace.configure({'run': {'echo': True, 'warn': True}})
