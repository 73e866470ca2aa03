import pybind11
from setuptools import Extension, setup

core = [
    "src/multipoly.cpp",
    "src/upoly.cpp",
    "src/ratfunc.cpp",
    "src/qmatrix.cpp",
    "src/roots.cpp",
    "src/rfmatrix.cpp",
    "src/diffop.cpp",
    "src/models.cpp",
    "src/repspace.cpp",
    "src/separation.cpp",
    "src/verify.cpp",
]

setup(
    ext_modules=[
        Extension(
            "qeslab._qeslab",
            sources=core + ["src/pybind.cpp"],
            include_dirs=["include", "vendor", pybind11.get_include()],
            libraries=["gmpxx", "gmp"],
            extra_compile_args=["-std=c++20", "-O2"],
            language="c++",
        )
    ]
)
