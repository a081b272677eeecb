# coding: utf-8
'''
Semilinear representations of finite groups over Galois extensions ``L/K``:
exact fields, character tables, cocycle-checked matrix representations,
Schur indices and their classification.
'''
from collections import OrderedDict

__version__ = '0.1.0'


def pformat_dict(data, separator='  '):
    '''
    Format columns as a right-aligned text table.

    Parameters
    ----------
    data : OrderedDict
        Column name → list of values (all lists of equal length).
    separator : str, optional
        Column separator.

    Returns
    -------
    str
        Header, rule and one line per row.
    '''
    data = OrderedDict((k, [str(v) for v in values])
                       for k, values in data.items())
    widths = [max([len(k)] + [len(v) for v in values])
              for k, values in data.items()]

    def line(cells):
        return separator.join(cell.rjust(width)
                              for cell, width in zip(cells, widths))

    rows = [line(row) for row in zip(*data.values())]
    return '\n'.join([line(data.keys()), separator.join('-' * width
                                                         for width in widths)]
                     + rows)
