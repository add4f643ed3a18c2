"""
공통 모듈
"""
from .config import Config
from .trace import snapshot_df, log_shape, log_step, log_warning

__all__ = ['Config', 'snapshot_df', 'log_shape', 'log_step', 'log_warning']
