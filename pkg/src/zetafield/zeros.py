"""Ordinates of the first nontrivial zeta zeros on the critical line.

The embedded table covers the first 100 zeros to better than 9 significant
digits, which is all the quadrature pre-splitting needs; a user-supplied
file (one positive decimal per line, ascending, '#' comments allowed) can
replace it for runs that need more coverage.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import OutOfDomain

_DEFAULT_ORDINATES = (
    14.1347251417, 21.0220396388, 25.0108575801, 30.4248761259, 32.9350615877,
    37.5861781588, 40.9187190121, 43.3270732809, 48.0051508812, 49.7738324777,
    52.9703214777, 56.4462476971, 59.3470440026, 60.8317785246, 65.1125440481,
    67.0798105295, 69.5464017112, 72.0671576745, 75.7046906991, 77.1448400689,
    79.3373750202, 82.9103808541, 84.7354929805, 87.4252746131, 88.8091112076,
    92.4918992706, 94.6513440405, 95.8706342282, 98.8311942182, 101.317851006,
    103.72553804, 105.446623052, 107.168611184, 111.029535543, 111.874659177,
    114.320220915, 116.226680321, 118.790782866, 121.370125002, 122.946829294,
    124.256818554, 127.51668388, 129.5787042, 131.087688531, 133.497737203,
    134.756509753, 138.116042055, 139.736208952, 141.123707404, 143.111845808,
    146.000982487, 147.422765343, 150.053520421, 150.925257612, 153.024693811,
    156.112909294, 157.597591818, 158.849988171, 161.188964138, 163.030709687,
    165.537069188, 167.184439978, 169.094515416, 169.911976479, 173.41153652,
    174.754191523, 176.441434298, 178.377407776, 179.91648402, 182.207078484,
    184.874467848, 185.598783678, 187.228922584, 189.416158656, 192.026656361,
    193.079726604, 195.26539668, 196.876481841, 198.015309676, 201.264751944,
    202.493594514, 204.189671803, 205.394697202, 207.906258888, 209.576509717,
    211.690862595, 213.34791936, 214.547044783, 216.169538508, 219.067596349,
    220.714918839, 221.430705555, 224.007000255, 224.98332467, 227.42144428,
    229.337413306, 231.2501887, 231.987235253, 233.693404179, 236.524229666,
)


@dataclass(frozen=True)
class ZeroOrdinates:
    """A strictly increasing array of positive zero ordinates."""

    ordinates: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.ordinates, dtype=np.float64).reshape(-1)
        if arr.size:
            if not np.all(np.isfinite(arr)) or arr[0] <= 0.0:
                raise OutOfDomain("zero ordinates must be finite and positive")
            if np.any(np.diff(arr) <= 0.0):
                raise OutOfDomain("zero ordinates must be strictly increasing")
        arr.setflags(write=False)
        object.__setattr__(self, "ordinates", arr)

    @classmethod
    def default(cls) -> "ZeroOrdinates":
        return cls(np.array(_DEFAULT_ORDINATES))

    @classmethod
    def from_file(cls, path: str | Path) -> "ZeroOrdinates":
        """Load ordinates from a plain-text file.

        One positive decimal per line, ascending; blank lines and '#'
        comments are ignored.
        """
        values = []
        for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                values.append(float(body))
            except ValueError as exc:
                raise OutOfDomain(f"{path}:{lineno}: not a number: {body!r}") from exc
        return cls(np.array(values))

    def up_to(self, t_max: float) -> np.ndarray:
        """Ordinates at or below t_max."""
        return self.ordinates[self.ordinates <= t_max]

    def __len__(self) -> int:
        return int(self.ordinates.size)
