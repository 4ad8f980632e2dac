from .product import router as r_product
from .coproduct import router as r_coproduct
from .derivation import router as r_derivation
from .matrix import router as r_matrix
from .dm import router as r_dm
from .dims import router as r_dims
from .reduce import router as r_reduce
from .coaction import router as r_coaction
from .oddmodel import router as r_oddmodel
from .coeffs import router as r_coeffs
from .verify import router as r_verify

routers = [
    r_product, r_coproduct, r_derivation, r_matrix, r_dm, r_dims, r_reduce, r_coaction, r_oddmodel, r_coeffs,
    r_verify
]
