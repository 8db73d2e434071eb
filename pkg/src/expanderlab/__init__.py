"""expanderlab: a desk-scale verification lab for conditional expansion
bounds of two-variable functions over prime fields, the spectral machinery of
the underlying regular directed graphs, and the companion real-number
incidence arguments."""

from .fp_core import (
    DomainError,
    FuncTable,
    PrimeModulus,
    SubgroupSpec,
    identity_table,
    is_prime,
    kth_powers,
    mod_inverse,
    multiplicity,
    pointwise_product,
    power_table,
    primes_in,
    random_table,
    square_root_table,
)
from .fp_sets import (
    FamilySpec,
    FpSet,
    GeneralForm,
    PowerForm,
    ProductShifted,
    SumShifted,
    generate,
    image,
    kth_power_set,
    mult_energy,
    productset,
    sumset,
)
from .spgraph import (
    EdgeRule,
    GramMatrix,
    SumProductGraph,
    build,
    connectivity,
    count_solutions,
    decompose_gram,
    edge_count,
    gram,
    gram_dump,
)
from .spectral import (
    DiscrepancyRecord,
    SpectralReport,
    discrepancy_check,
    eigs_top2,
    quad_form_bound,
    verify_perron,
)
from .reporting import BoundReport
from . import bounds, real_expand

__version__ = "0.1.0"
