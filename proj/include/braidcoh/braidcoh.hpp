#pragma once
#include "errors.hpp"
#include "exactfield.hpp"
#include "tensorcalc.hpp"
#include "linalg.hpp"
#include "algebra.hpp"
#include "complexes.hpp"
#include "hopf.hpp"
#include "deformation.hpp"
#include "multicomplex.hpp"
