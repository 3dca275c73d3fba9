#pragma once

#include "foldmap/automorphism.hpp"
#include "foldmap/cyclo.hpp"
#include "foldmap/folding.hpp"
#include "foldmap/leading_terms.hpp"
#include "foldmap/poly.hpp"
#include "foldmap/poly_json.hpp"
#include "foldmap/poly_parse.hpp"
#include "foldmap/projective.hpp"
#include "foldmap/report.hpp"
#include "foldmap/upoly.hpp"
#include "foldmap/weyl_oracle.hpp"
