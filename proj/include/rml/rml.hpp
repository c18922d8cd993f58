#ifndef RML_RML_HPP
#define RML_RML_HPP

#include "codefile.hpp"
#include "fields.hpp"
#include "genweights.hpp"
#include "linalg.hpp"
#include "macwilliams.hpp"
#include "matrix_code.hpp"
#include "qpolymatroid.hpp"
#include "report.hpp"
#include "vector_code.hpp"
#include "verify.hpp"

#endif
