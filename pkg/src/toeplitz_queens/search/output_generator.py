# SPDX-License-Identifier: Apache-2.0

"""Result files for enumeration, domination and census runs"""

import json
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Optional

from defusedcsv import csv

from toeplitz_queens.core.document import placement_to_document
from toeplitz_queens.search.census import CENSUS_HEADERS
from toeplitz_queens.search.domination import DominationReport
from toeplitz_queens.search.orbits import EnumerationReport

logger = logging.getLogger(__name__)


def enumeration_to_document(report: EnumerationReport) -> dict:
    doc = {
        'n': report.n,
        'total_count': report.total_count,
        'fundamental_count': report.fundamental_count,
        'representatives': [placement_to_document(s.cells()) for s in report.representatives],
        'elapsed_ms': round(report.elapsed * 1000, 3),
    }
    if report.orbit_sizes:
        doc['orbit_sizes'] = {str(size): count for size, count in report.orbit_sizes.items()}
    if report.solutions:
        doc['solutions'] = [placement_to_document(s.cells()) for s in report.solutions]
    return doc


def domination_to_document(report: DominationReport) -> dict:
    return {
        'n': report.n,
        'gamma': report.gamma,
        'witness': placement_to_document(report.witness),
    }


class OutputGenerator:
    """Writes one result file per run; an existing file at the target path is overwritten"""

    def __init__(self, output_dir: str = 'results'):
        self.output_dir = output_dir

    def _target(self, kind: str, n, suffix: str, path: Optional[str]) -> Path:
        if path:
            target = Path(path)
            target.parent.mkdir(parents=True, exist_ok=True)
            return target
        os.makedirs(self.output_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        return Path(self.output_dir) / f"{kind}-n{n}-{timestamp}.{suffix}"

    def _write_json(self, target: Path, data: dict) -> Path:
        with open(target, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2)
            f.write('\n')
        logger.info(f"Generated: {target}")
        return target

    def write_enumeration(self, report: EnumerationReport, path: Optional[str] = None) -> Path:
        return self._write_json(self._target('enumerate', report.n, 'json', path), enumeration_to_document(report))

    def write_domination(self, report: DominationReport, path: Optional[str] = None) -> Path:
        return self._write_json(self._target('dominate', report.n, 'json', path), domination_to_document(report))

    def write_census(self, rows: list, start: int, stop: int, path: Optional[str] = None) -> Path:
        target = self._target('census', f"{start}-{stop}", 'csv', path)
        with open(target, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(CENSUS_HEADERS)
            writer.writerows([['' if v is None else v for v in row] for row in rows])
        logger.info(f"Generated: {target}")
        return target


def read_census(path) -> tuple[list, list]:
    """(headers, rows) of a census CSV, every cell as a string"""
    with open(path, 'r', newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        return next(reader), list(reader)
