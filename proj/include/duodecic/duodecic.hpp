#pragma once

#include "arith.hpp"
#include "case_table.hpp"
#include "combine.hpp"
#include "errors.hpp"
#include "fp_poly.hpp"
#include "int_poly.hpp"
#include "linalg.hpp"
#include "montes2.hpp"
#include "newton.hpp"
#include "pure12.hpp"
#include "render.hpp"
#include "report.hpp"
#include "theta.hpp"
#include "verify.hpp"
