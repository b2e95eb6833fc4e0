"""
This module is for lightweight data holders to make interfacing the
return values of these functions easier.
"""
from collections import namedtuple

DEFAULT_CANDIDATE_COUNT = 4096
DEFAULT_ROUNDS = 2000
DEFAULT_RESTARTS = 8
DEFAULT_BATCH = 64
DEFAULT_PERTURB_SCALE = 0.05
DEFAULT_BISECTION_STEPS = 10

Budget = namedtuple('Budget', ['candidate_count', 'rounds', 'restarts',
                               'batch', 'perturb_scale', 'bisection_steps',
                               'threads'])
Budget.__new__.__defaults__ = (DEFAULT_CANDIDATE_COUNT, DEFAULT_ROUNDS,
                               DEFAULT_RESTARTS, DEFAULT_BATCH,
                               DEFAULT_PERTURB_SCALE, DEFAULT_BISECTION_STEPS,
                               None)

# one row of a diameter table
DiamRow = namedtuple('DiamRow', ['n', 'M', 'D', 'log_abs_det', 'd_n'])

DiamSummary = namedtuple('DiamSummary', ['rows', 'final', 'spread'])

NumericResultant = namedtuple('NumericResultant',
                              ['value', 'condition', 'ill_conditioned',
                               'priority'])

ExpansionStats = namedtuple('ExpansionStats', ['terms', 'degree'])

EscapeResult = namedtuple('EscapeResult', ['value', 'escaped', 'iterations'])

GreenSample = namedtuple('GreenSample', ['point', 'value'])

PullbackReport = namedtuple('PullbackReport',
                            ['lhs', 'rhs', 'gap', 'res_abs', 'lhs_leading',
                             'leading_gap', 'base_rows', 'preimage_rows',
                             'leading_rows'])

BBReport = namedtuple('BBReport', ['lhs', 'rhs', 'gap', 'samples', 'depth',
                                   'seed', 'res_abs'])

PadicPullback = namedtuple('PadicPullback', ['lhs', 'rhs', 'equal'])

InvarianceReport = namedtuple('InvarianceReport',
                              ['holds', 'certified_by_formula',
                               'sampled_inclusion', 'sampled_converse',
                               'trials'])

DEFAULT_ESCAPE_CAP = 64
DEFAULT_ESCAPE_TOL = 1e-12

# radius with |z| > radius => |F(z)| >= 2|z|, plus the figures it came from
EscapeParameters = namedtuple('EscapeParameters',
                              ['radius', 'cap', 'tol', 'sphere_min',
                               'lower_norm'])
