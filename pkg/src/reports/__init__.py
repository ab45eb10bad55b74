from .audit import AuditRunner, bv_golden_forms, EXPECTED_RHO

__all__ = ['AuditRunner', 'bv_golden_forms', 'EXPECTED_RHO']
