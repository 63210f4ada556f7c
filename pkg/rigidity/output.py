"""
Output formatting for rigidity subcommands.

Verdicts, rank reports, balance evidence and stress residuals are rendered
with status symbols and colour, gated by verbosity. --json output bypasses
this module.
"""

import sys
from enum import IntEnum
from typing import Dict, List, Optional
import logging

try:
    from colorama import init as colorama_init, Fore, Style
    COLORAMA_AVAILABLE = True
    colorama_init(autoreset=True)
except ImportError:
    COLORAMA_AVAILABLE = False

    class Fore:
        GREEN = ''
        RED = ''
        YELLOW = ''
        BLUE = ''
        WHITE = ''
        CYAN = ''
        RESET = ''

    class Style:
        BRIGHT = ''
        DIM = ''
        RESET_ALL = ''

logger = logging.getLogger(__name__)


class VerbosityLevel(IntEnum):
    """Verbosity levels for output control."""
    QUIET = -1      # Errors only
    NORMAL = 0      # Verdict and summary
    VERBOSE = 1     # Reports and evidence
    DETAILED = 2    # Per-item listings
    DEBUG = 3       # Debug information


class OutputFormatter:
    """Formats results of rigidity subcommands for the terminal."""

    SYMBOLS = {
        'success': '✓',
        'flexible': '↻',
        'warning': '⚠',
        'error': '✗',
        'info': 'ℹ',
        'progress': '→',
        'success_ascii': '[OK]',
        'flexible_ascii': '[~~]',
        'warning_ascii': '[!!]',
        'error_ascii': '[XX]',
        'info_ascii': '[i]',
        'progress_ascii': '=>',
    }

    VERDICT_STYLES = {
        'rigid': ('success', Fore.GREEN, "Rigid"),
        'flexible': ('flexible', Fore.YELLOW, "Flexible"),
        'inconclusive-rigid': ('warning', Fore.YELLOW, "Rigid (inconclusive)"),
    }

    def __init__(self, verbosity: int = 0, use_color: bool = True, use_unicode: bool = True):
        """
        Initialize the output formatter.

        Args:
            verbosity: Verbosity level (-1 to 3)
            use_color: Whether to use coloured output
            use_unicode: Whether to use Unicode symbols
        """
        self.verbosity = verbosity
        self.use_color = use_color and COLORAMA_AVAILABLE and not self._is_output_redirected()
        self.use_unicode = use_unicode and self._supports_unicode()

    def _is_output_redirected(self) -> bool:
        return not sys.stdout.isatty()

    def _supports_unicode(self) -> bool:
        if self._is_output_redirected():
            return False
        encoding = getattr(sys.stdout, 'encoding', None) or ''
        return 'utf' in encoding.lower()

    def _get_symbol(self, symbol_type: str) -> str:
        if self.use_unicode:
            return self.SYMBOLS.get(symbol_type, '')
        return self.SYMBOLS.get(f"{symbol_type}_ascii", self.SYMBOLS.get(symbol_type, ''))

    def _colorize(self, text: str, color: str = '') -> str:
        if not self.use_color or not color:
            return text
        return f"{color}{text}{Style.RESET_ALL}"

    def format_verdict(self, verdict: str, method: Optional[str] = None) -> Optional[str]:
        """One line naming the verdict, shown unless quiet."""
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        symbol, color, label = self.VERDICT_STYLES.get(verdict, ('info', '', verdict))
        text = self._colorize(f"{self._get_symbol(symbol)} {label}", color)
        if method:
            text += f" (method: {method})"
        return text

    def format_rank_report(self, report: Dict) -> Optional[str]:
        """Rank, kernel dimensions and trial seeds from a RankReport dict."""
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        lines = [
            f"  Rank:              {report['rank']}",
            f"  Right kernel dim:  {report['right_kernel_dim']}",
            f"  Left kernel dim:   {report['left_kernel_dim']}",
        ]
        if self.verbosity >= VerbosityLevel.VERBOSE:
            lines.append(f"  Field:             {report['field']}")
            lines.append(f"  Best seed:         {report['best_seed']} of {report['trials']} trial(s)")
        if self.verbosity >= VerbosityLevel.DETAILED:
            lines.append(f"  Ranks per trial:   {', '.join(str(r) for r in report['ranks'])}")
        return '\n'.join(lines)

    def format_balance(self, report: Dict) -> Optional[str]:
        """Summary of a BalanceReport dict."""
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        if report['balanced']:
            headline = self._colorize(f"{self._get_symbol('success')} Balanced", Fore.GREEN)
        else:
            headline = self._colorize(f"{self._get_symbol('error')} Not balanced", Fore.RED)
        lines = [f"{headline} ({report['mode']})",
                 f"  {len(report['sources'])} source(s), {len(report['sinks'])} sink(s)"]
        if report['sinks_exceed_sources']:
            lines.append(self._colorize(f"  {self._get_symbol('warning')} More sinks than sources", Fore.YELLOW))
        if report.get('failing_sigma'):
            lines.append(f"  Nonzero T_sigma for sources {report['failing_sigma']}")
        if self.verbosity >= VerbosityLevel.VERBOSE:
            lines.append(f"  Checked {len(report['sigmas'])} source subset(s)")
        if self.verbosity >= VerbosityLevel.DETAILED:
            for entry in report['sigmas']:
                status = 'zero' if entry['zero'] else 'nonzero'
                lines.append(f"    {entry['sigma']}: {status}")
            for pair, terms in report['certificate_terms'].items():
                lines.append(f"    T {pair}: {terms} term(s)")
        return '\n'.join(lines)

    def format_residuals(self, residual: Dict) -> Optional[str]:
        """Equilibrium check of a synthesized stress."""
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        if residual['passed']:
            return self._colorize(f"{self._get_symbol('success')} wA = 0 at every vertex", Fore.GREEN)
        failing = [v for v, r in residual['residuals'].items() if any(x != '0' for x in r)]
        return self._colorize(f"{self._get_symbol('error')} Nonzero residual at vertices {', '.join(failing)}",
                              Fore.RED)

    def format_listing(self, title: str, items: List[str]) -> Optional[str]:
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        return '\n'.join([self._colorize(title, Style.BRIGHT)] + [f"  {item}" for item in items])

    def format_header(self, message: str) -> Optional[str]:
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        return self._colorize(message, Style.BRIGHT)

    def format_error(self, message: str) -> str:
        """Format an error message (always shown)."""
        return self._colorize(f"{self._get_symbol('error')} Error: {message}", Fore.RED)

    def format_warning(self, message: str) -> Optional[str]:
        if self.verbosity <= VerbosityLevel.QUIET:
            return None
        return self._colorize(f"{self._get_symbol('warning')} Warning: {message}", Fore.YELLOW)

    def format_info(self, message: str) -> Optional[str]:
        if self.verbosity < VerbosityLevel.VERBOSE:
            return None
        return f"{self._get_symbol('info')} {message}"

    def format_debug(self, message: str) -> Optional[str]:
        if self.verbosity < VerbosityLevel.DEBUG:
            return None
        return self._colorize(f"[DEBUG] {message}", Style.DIM)


_global_formatter = None


def configure_formatter(verbosity: int = 0, use_color: bool = True, use_unicode: bool = True) -> OutputFormatter:
    """Replace the global formatter with one using the given settings."""
    global _global_formatter
    _global_formatter = OutputFormatter(verbosity, use_color, use_unicode)
    return _global_formatter


def emit(text: Optional[str]) -> None:
    """Print text unless the formatter suppressed it."""
    if text is not None:
        print(text)
