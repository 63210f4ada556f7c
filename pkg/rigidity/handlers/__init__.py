"""
Subcommand handlers for the rigidity tool, one module per subcommand.
"""

from .check import handle_check_operation
from .oracle import handle_oracle_operation
from .straighten import handle_straighten_operation
from .balanced import handle_balanced_operation
from .stress import handle_stress_operation
from .certificate import handle_certificate_operation
from .reduce import handle_reduce_operation
from .config import handle_config_operation
from .help import handle_help_operation

HANDLERS = {
    'check': handle_check_operation,
    'oracle': handle_oracle_operation,
    'straighten': handle_straighten_operation,
    'balanced': handle_balanced_operation,
    'stress': handle_stress_operation,
    'certificate': handle_certificate_operation,
    'reduce': handle_reduce_operation,
    'config': handle_config_operation,
    'help': handle_help_operation,
}

__all__ = [
    'handle_check_operation',
    'handle_oracle_operation',
    'handle_straighten_operation',
    'handle_balanced_operation',
    'handle_stress_operation',
    'handle_certificate_operation',
    'handle_reduce_operation',
    'handle_config_operation',
    'handle_help_operation',
    'HANDLERS'
]
