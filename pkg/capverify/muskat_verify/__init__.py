"""
    Certified sign conditions of the Muskat turning problems.
"""

from capverify.muskat_verify.curves import CurveFamily, curve_bifurcation, curve_flat, curve_theorem1
from capverify.muskat_verify.decisions import CellVerdict, ParamCell, Verdict, di2_nonzero, dt_rt_sign
from capverify.muskat_verify.integrals import a_confined, a_flat, i1
from capverify.muskat_verify.kernels import di2, i2
from capverify.muskat_verify.scan import ScanResult, bifurcation_scan
from capverify.muskat_verify.verify import verify_di2, verify_scan, verify_theorem1


__all__ = [
    'CellVerdict',
    'CurveFamily',
    'ParamCell',
    'ScanResult',
    'Verdict',
    'a_confined',
    'a_flat',
    'bifurcation_scan',
    'curve_bifurcation',
    'curve_flat',
    'curve_theorem1',
    'di2',
    'di2_nonzero',
    'dt_rt_sign',
    'i1',
    'i2',
    'verify_di2',
    'verify_scan',
    'verify_theorem1',
]
