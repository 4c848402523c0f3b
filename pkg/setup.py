import os

from setuptools import Extension, setup

# The compiled kernel backend is optional: without Cython (or with
# EQUICOH_NO_EXTENSION=1) the package installs pure-Python only and
# equicoh._kernels falls back to the reference implementation.
ext_modules = []
if os.environ.get("EQUICOH_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "equicoh._kernels._fast",
                    ["src/equicoh/_kernels/_fast.pyx"],
                    # Keep C arithmetic identical to the pure backend:
                    # no FMA contraction, no cos/sin -> sincos fusion
                    # (glibc sincos is 1 ulp off plain cos for some args).
                    extra_compile_args=[
                        "-O2",
                        "-ffp-contract=off",
                        "-fno-builtin",
                    ],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
