import dataclasses
import json
import logging
from collections.abc import Iterable
from enum import StrEnum
from pathlib import Path

import capverify
from capverify.constants import EXIT_FAIL, EXIT_PASS, EXIT_UNKNOWN
from capverify.interval_core import Interval
from capverify.quad_rigor import Enclosure


logger = logging.getLogger(__name__)


class Status(StrEnum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    UNKNOWN = 'UNKNOWN'

    @property
    def exit_code(self) -> int:
        return {Status.PASS: EXIT_PASS, Status.FAIL: EXIT_FAIL, Status.UNKNOWN: EXIT_UNKNOWN}[self]


def status_from_checks(checks: Iterable[bool | None]) -> Status:
    """
    All True -> PASS, any False -> FAIL, otherwise (some undecided) UNKNOWN.

    >>> status_from_checks([True, None]), status_from_checks([None, False]), status_from_checks([])
    (<Status.UNKNOWN: 'UNKNOWN'>, <Status.FAIL: 'FAIL'>, <Status.PASS: 'PASS'>)
    """
    checks = list(checks)
    if any(check is False for check in checks):
        return Status.FAIL
    if any(check is None for check in checks):
        return Status.UNKNOWN
    return Status.PASS


def strict_sign(value: Interval) -> int:
    """+1 / -1 if the interval excludes zero, else 0."""
    if value.certainly_positive():
        return 1
    if value.certainly_negative():
        return -1
    return 0


def _jsonable(value):
    if isinstance(value, Interval):
        return value.to_literal()
    if isinstance(value, Enclosure):
        return value.as_dict()
    if isinstance(value, StrEnum):
        return str(value)
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return _jsonable(dataclasses.asdict(value))
    return value


@dataclasses.dataclass
class ProofReport:
    """
    The certificate artifact of one verification command.

    >>> report = ProofReport(command='demo', settings={'tol': 1e-6})
    >>> report.add('x', Interval(1, 2), positive=True)
    >>> report.status = Status.PASS
    >>> ProofReport.from_json(report.to_json()) == report
    True
    """

    command: str
    settings: dict = dataclasses.field(default_factory=dict)
    results: list = dataclasses.field(default_factory=list)
    status: Status = Status.UNKNOWN
    wall_time: float = 0.0
    tool_version: str = capverify.__version__
    determinism_seed: None = None

    def add(self, name: str, value: 'Interval | Enclosure | None' = None, **extra) -> None:
        entry = {'name': name}
        if value is not None:
            entry['value'] = _jsonable(value)
        entry.update(_jsonable(extra))
        self.results.append(entry)

    def result(self, name: str) -> dict:
        for entry in self.results:
            if entry['name'] == name:
                return entry
        raise KeyError(name)

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def as_dict(self, include_wall_time: bool = True) -> dict:
        data = {
            'tool_version': self.tool_version,
            'command': self.command,
            'settings': _jsonable(self.settings),
            'results': _jsonable(self.results),
            'status': str(self.status),
            'determinism_seed': self.determinism_seed,
        }
        if include_wall_time:
            data['wall_time'] = self.wall_time
        return data

    def to_json(self, include_wall_time: bool = True) -> str:
        return json.dumps(self.as_dict(include_wall_time), indent=2, sort_keys=True) + '\n'

    @classmethod
    def from_json(cls, text: str) -> 'ProofReport':
        data = json.loads(text)
        return cls(
            command=data['command'],
            settings=data['settings'],
            results=data['results'],
            status=Status(data['status']),
            wall_time=data.get('wall_time', 0.0),
            tool_version=data['tool_version'],
            determinism_seed=data.get('determinism_seed'),
        )

    def write(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding='utf-8')
        logger.info(f'Report written to {path}')
        return path
