#
# Copyright (C) 2026  optrig developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Suite 500, Boston, MA 02110-1335  USA

"""Run ``trig`` over a list of matrix files in worker threads.

Every worker owns a queue of length 1, and files are dealt out to the
workers in turn.  Dealing blocks while the next worker is still busy, so
at most ``jobs`` files are in flight.  Results come back in input order
whatever order the workers finish in.
"""

import logging
import os
import threading
import time
from queue import Empty, Full, Queue

from .errors import (
    EXIT_INPUT,
    EXIT_NUMERICAL,
    EXIT_OK,
    EmptyInput,
    InputError,
    InvalidParameter,
    OptrigError,
    UnexpectedFailure,
    )
from .matrixfile import parse_matrix_file, read_text
from .spectral import DEFAULT_SYM_TOL
from .trig import trig_report

log = logging.getLogger("optrig.batch")

NOOP = '<noop>'


def read_batch_list(path):
    """Matrix file paths listed one per line in ``path``.

    Relative paths are taken relative to the directory of the list.
    """
    base = os.path.dirname(path)
    paths = []
    for line in read_text(path).splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        paths.append(os.path.join(base, line))
    if not paths:
        raise EmptyInput(action='process in %s' % path)
    return paths


class BatchEntry(object):
    """The report of one file, or the error that stopped it."""

    def __init__(self, path, report=None, error=None):
        self.path = path
        self.report = report
        self.error = error

    @property
    def exit_code(self):
        if self.error is None:
            return EXIT_OK
        return self.error.exit_code

    @property
    def status(self):
        if self.error is None:
            return 'ok'
        if isinstance(self.error, InputError):
            return 'input-error'
        return 'numerical-error'

    def as_dict(self):
        d = {'path': self.path, 'status': self.status}
        if self.error is None:
            d['result'] = self.report
            d['warnings'] = self.report.warnings
        else:
            d['error'] = str(self.error)
        return d


class BatchResult(object):

    def __init__(self, entries):
        self.entries = entries

    @property
    def exit_code(self):
        codes = set(entry.exit_code for entry in self.entries)
        if EXIT_NUMERICAL in codes:
            return EXIT_NUMERICAL
        if EXIT_INPUT in codes:
            return EXIT_INPUT
        return EXIT_OK

    @property
    def warnings(self):
        return ['%s: %s' % (entry.path, warning)
                for entry in self.entries if entry.error is None
                for warning in entry.report.warnings]

    def as_dict(self):
        return {'entries': self.entries,
                'failed': sum(1 for e in self.entries if e.error is not None)}


class MatrixWorker(object):
    """Process matrix files in a worker thread."""

    _timer = time.time

    def __init__(self, identifier, options=None, sym_tol=DEFAULT_SYM_TOL,
                 blocking_time=1.0, _queue_size=1):
        self.identifier = identifier
        self.options = options
        self.sym_tol = sym_tol
        self.queue = Queue(_queue_size)
        self.start_time = self.end_time = None
        self.results = {}
        self.stats = []
        self.blocking_time = blocking_time

    def step_next(self):
        item = self.queue.get(True, self.blocking_time)
        if item == NOOP:
            self.queue.task_done()
            return
        index, path = item
        try:
            self.start_time = self._timer()
            entry = self.process(path)
            self.end_time = self._timer()
            self.results[index] = entry
            self.update_stats(path, entry.error is None)
        finally:
            self.queue.task_done()

    def run(self, stop_event):
        while not stop_event.is_set():
            try:
                self.step_next()
            except Empty:
                pass

    def process(self, path):
        try:
            matrix = parse_matrix_file(path, sym_tol=self.sym_tol)
            return BatchEntry(path, report=trig_report(matrix, self.options))
        except OptrigError as e:
            log.info('%s failed: %s', path, e)
            return BatchEntry(path, error=e)
        except Exception as e:
            # A dead worker would leave the dealer blocked on its queue.
            log.exception('%s failed unexpectedly', path)
            return BatchEntry(path, error=UnexpectedFailure(
                path=path, kind=e.__class__.__name__, reason=str(e)))

    def update_stats(self, path, success):
        elapsed = self.end_time - self.start_time
        self.stats.append((path, success, elapsed))
        log.debug('worker %s: %s in %.3f secs', self.identifier, path,
                  elapsed)


class BatchRunner(object):
    """Deal matrix files out to ``jobs`` worker threads."""

    _worker_class = MatrixWorker

    def __init__(self, jobs=1, options=None, sym_tol=DEFAULT_SYM_TOL,
                 blocking_time=0.1):
        if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
            raise InvalidParameter(name='jobs', value=jobs,
                                   reason='must be a positive integer')
        self.jobs = jobs
        self.options = options
        self.sym_tol = sym_tol
        self.blocking_time = blocking_time
        self._threads = []
        self.stop_event = threading.Event()

    def _start_workers(self):
        for identifier in range(self.jobs):
            worker = self._worker_class(identifier, self.options,
                                        sym_tol=self.sym_tol,
                                        blocking_time=self.blocking_time)
            t = threading.Thread(target=worker.run, args=(self.stop_event,),
                                 name='MatrixWorker-%d' % (identifier,))
            t.daemon = True
            self._threads.append((worker, t))
            t.start()

    def finish_queues(self):
        """Wait for all queues of all workers to finish."""
        for worker, t in self._threads:
            worker.queue.join()

    def stop_and_join(self):
        """Stop all running workers, and return."""
        self.stop_event.set()
        for worker, t in self._threads:
            try:
                worker.queue.put_nowait(NOOP)
            except Full:
                pass
        for worker, t in self._threads:
            t.join()

    def run(self, paths):
        self._start_workers()
        try:
            for index, path in enumerate(paths):
                worker = self._threads[index % self.jobs][0]
                worker.queue.put((index, path))
            self.finish_queues()
        finally:
            self.stop_and_join()
        results = {}
        for worker, t in self._threads:
            results.update(worker.results)
        return BatchResult([results[i] for i in range(len(paths))])


def run_batch(paths, jobs=1, options=None, sym_tol=DEFAULT_SYM_TOL):
    """A `BatchResult` with one entry per path, in the order given."""
    return BatchRunner(jobs, options, sym_tol).run(paths)
