from .greedy import METHOD_BY_POOL, gradient_greedy_run
from .iqeb import IqebGrowth, iqeb_run
from .reference import reference_energies
from .uccsd import UccsdResult, uccsd_baseline, uccsd_elements, uccsd_parameter_count, uccsd_run

__all__ = [
    "IqebGrowth",
    "iqeb_run",
    "gradient_greedy_run",
    "METHOD_BY_POOL",
    "reference_energies",
    "UccsdResult",
    "uccsd_baseline",
    "uccsd_elements",
    "uccsd_parameter_count",
    "uccsd_run",
]
