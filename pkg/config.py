import os

from quadrature import Precision


class Config:
    ABS_TOL = float(os.environ.get('KGT_ABS_TOL', '1e-12'))
    MAX_SUBDIVISIONS = int(os.environ.get('KGT_MAX_SUBDIVISIONS', '2000'))
    TAIL_CUT = float(os.environ.get('KGT_TAIL_CUT', '40.0'))
    MAX_SERIES_TERMS = int(float(os.environ.get('KGT_MAX_SERIES_TERMS', '1e7')))
    MAX_LATTICE_POINTS = int(os.environ.get('KGT_MAX_LATTICE_POINTS', '500000'))
    SINGULAR_THRESHOLD = float(os.environ.get('KGT_SINGULAR_THRESHOLD', '1e-14'))
    VERIFY_TOL = float(os.environ.get('KGT_VERIFY_TOL', '1e-6'))
    LOG_LEVEL = os.environ.get('KGT_LOG_LEVEL', 'WARNING')
    REPORT_DIR = os.environ.get('KGT_REPORT_DIR', 'reports')

    @classmethod
    def precision(cls, abs_tol=None):
        return Precision(
            abs_tol=cls.ABS_TOL if abs_tol is None else abs_tol,
            max_subdivisions=cls.MAX_SUBDIVISIONS,
            tail_cut=cls.TAIL_CUT,
            max_series_terms=cls.MAX_SERIES_TERMS,
        )
