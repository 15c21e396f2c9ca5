#pragma once

#include "bclink/angle.hpp"
#include "bclink/chebyshev.hpp"
#include "bclink/error.hpp"
#include "bclink/format.hpp"
#include "bclink/pillowcase.hpp"
#include "bclink/seifert_json.hpp"
#include "bclink/signature.hpp"
#include "bclink/su2.hpp"
#include "bclink/torus_rep.hpp"
#include "bclink/verify.hpp"
