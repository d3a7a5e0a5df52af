#pragma once

#include "braid_action.hpp"
#include "functor.hpp"
#include "hecke.hpp"
#include "intertwiner.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "qmatrix.hpp"
#include "qmatrix_json.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "schurweyl.hpp"
#include "tableaux.hpp"
#include "threads.hpp"
#include "verify.hpp"
#include "ybspace.hpp"
