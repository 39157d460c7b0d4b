"""
    Proof reports: the machine readable certificate of every verification command.
"""

from capverify.reporting.report import ProofReport, Status, status_from_checks, strict_sign


__all__ = ['ProofReport', 'Status', 'status_from_checks', 'strict_sign']
