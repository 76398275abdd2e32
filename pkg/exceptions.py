"""
⚠️ Exceptions RootBounds
Hiérarchie d'erreurs commune à tous les modules
"""

from typing import Optional


class RootBoundsError(Exception):
    """Erreur de base du projet"""


class PolynomialError(RootBoundsError, ValueError):
    """Polynôme nul, constant ou de degré insuffisant"""


class DegenerateCenterError(RootBoundsError, ValueError):
    """Le centre est (numériquement) une racine de p"""


class BoundUndefinedError(RootBoundsError, ValueError):
    """Borne non définie (rayon infini pour ce k)"""


class ConditionError(RootBoundsError, ValueError):
    """Condition d'application d'une borne non satisfaite"""


class BracketError(RootBoundsError, ArithmeticError):
    """Pas de changement de signe sur l'intervalle"""


class ParseError(RootBoundsError, ValueError):
    """Entrée de coefficients mal formée"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleConvergenceError(RootBoundsError, RuntimeError):
    """L'itération simultanée n'a pas convergé"""
