import csv
import io
import logging
from pathlib import Path

import numpy as np

from capverify.muskat_verify.decisions import Verdict
from capverify.muskat_verify.scan import ScanResult


logger = logging.getLogger(__name__)

CSV_HEADER = ('h2_lo', 'h2_hi', 'K_lo', 'K_hi', 'verdict', 'encl_lo', 'encl_hi', 'depth')

COLORS = {
    Verdict.NO_TURN: (255, 221, 0),  # yellow
    Verdict.TURN: (200, 0, 0),  # red
    Verdict.UNKNOWN: (255, 255, 255),
}


def grid_csv(result: ScanResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for leaf in result.leaves:
        cell = leaf.cell
        writer.writerow(
            (
                repr(cell.h2.lo),
                repr(cell.h2.hi),
                repr(cell.K.lo),
                repr(cell.K.hi),
                str(leaf.verdict),
                repr(leaf.enclosure.lo),
                repr(leaf.enclosure.hi),
                cell.depth,
            )
        )
    return buffer.getvalue()


def _pixel(value: float, lo: float, hi: float, size: int) -> int:
    return min(size, max(0, round((value - lo) / (hi - lo) * size)))


def raster(result: ScanResult) -> np.ndarray:
    """
    RGB image with 2**max_depth pixels per axis: h2 grows to the right, K upwards.
    """
    size = 2**result.max_depth
    image = np.full((size, size, 3), 255, dtype=np.uint8)
    h2_box = result.box.h2
    K_box = result.box.K
    for leaf in result.leaves:
        cell = leaf.cell
        x0 = _pixel(cell.h2.lo, h2_box.lo, h2_box.hi, size)
        x1 = _pixel(cell.h2.hi, h2_box.lo, h2_box.hi, size)
        k0 = _pixel(cell.K.lo, K_box.lo, K_box.hi, size)
        k1 = _pixel(cell.K.hi, K_box.lo, K_box.hi, size)
        image[size - k1 : size - k0, x0:x1] = COLORS[leaf.verdict]
    return image


def ppm_bytes(image: np.ndarray) -> bytes:
    """Binary PPM (P6)"""
    height, width, _ = image.shape
    header = f'P6\n{width} {height}\n255\n'.encode('ascii')
    return header + np.ascontiguousarray(image, dtype=np.uint8).tobytes()


def write_grid(result: ScanResult, output_dir: Path, stem: str = 'muskat_scan') -> tuple[Path, Path]:
    output_dir.mkdir(parents=True, exist_ok=True)
    csv_path = output_dir / f'{stem}.csv'
    csv_path.write_text(grid_csv(result), encoding='utf-8')
    ppm_path = output_dir / f'{stem}.ppm'
    ppm_path.write_bytes(ppm_bytes(raster(result)))
    logger.info(f'Grid written to {csv_path} and {ppm_path}')
    return csv_path, ppm_path
