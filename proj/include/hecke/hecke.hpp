#pragma once

#include "cyclotomic.hpp"
#include "gprn.hpp"
#include "matrix.hpp"
#include "mutation.hpp"
#include "params.hpp"
#include "rational_poly.hpp"
#include "seminormal.hpp"
#include "serialize.hpp"
#include "tableaux.hpp"
#include "verify.hpp"
#include "word_basis.hpp"
