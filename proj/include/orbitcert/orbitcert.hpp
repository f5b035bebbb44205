#ifndef ORBITCERT_ORBITCERT_HPP
#define ORBITCERT_ORBITCERT_HPP

#include "orbitcert/corpus.hpp"
#include "orbitcert/criteria.hpp"
#include "orbitcert/grading.hpp"
#include "orbitcert/homvector.hpp"
#include "orbitcert/kempf_ness.hpp"
#include "orbitcert/lie_algebra.hpp"
#include "orbitcert/orbit.hpp"
#include "orbitcert/problem.hpp"
#include "orbitcert/report.hpp"
#include "orbitcert/simplex.hpp"
#include "orbitcert/subalgebra.hpp"
#include "orbitcert/table.hpp"
#include "orbitcert/version.hpp"

#endif
