# coding: utf-8
'''
Exception types raised by :mod:`slr`.

All exceptions derive from builtin exception classes so callers that only
know about ``ValueError``/``RuntimeError`` keep working.  The command line
front end maps them onto stable exit codes (see :data:`EXIT_CODES`).
'''


class SpecError(ValueError):
    '''
    Malformed tower, group, representation or character table input.

    Parameters
    ----------
    message : str
        Human readable description.
    field : str, optional
        Dotted path of the offending input field (e.g., ``rows.2``).
    '''
    def __init__(self, message, field=None):
        if field is not None:
            message = '[{}] {}'.format(field, message)
        super(SpecError, self).__init__(message)
        self.field = field


class TowerMismatchError(SpecError):
    '''Elements or representations belong to different towers/surjections.'''


class InvalidRepError(SpecError):
    '''Singular matrix or broken cocycle relation in a semilinear rep.'''


class InconsistencyError(SpecError):
    '''A list of representations is duplicated or incomplete.'''


class PreconditionError(ValueError):
    '''A mathematical hypothesis required by an operation does not hold.'''


class UnsupportedError(PreconditionError):
    '''The requested computation lies outside the implemented range.'''


class BudgetExceededError(RuntimeError):
    '''
    An exhaustive enumeration would exceed its budget.

    Parameters
    ----------
    required : int
        Number of candidates the enumeration needs.
    budget : int
        Maximum number of candidates allowed.
    '''
    def __init__(self, required, budget, message=None):
        if message is None:
            message = ('Enumeration needs {} candidates, budget is {}.'
                       .format(required, budget))
        super(BudgetExceededError, self).__init__(message)
        self.required = required
        self.budget = budget


class InternalError(RuntimeError):
    '''An identity that must hold exactly failed to verify.'''


#: Exit code per exception type, most specific first.
EXIT_CODES = ((BudgetExceededError, 3),
              (InternalError, 4),
              (SpecError, 2),
              (PreconditionError, 2))


def exit_code(exception):
    for type_i, code_i in EXIT_CODES:
        if isinstance(exception, type_i):
            return code_i
    return 4
