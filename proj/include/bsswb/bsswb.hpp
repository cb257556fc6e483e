#pragma once

#include "bsswb/cantor.hpp"
#include "bsswb/codec.hpp"
#include "bsswb/corpus.hpp"
#include "bsswb/error.hpp"
#include "bsswb/expr.hpp"
#include "bsswb/field_elem.hpp"
#include "bsswb/godel.hpp"
#include "bsswb/irreducible.hpp"
#include "bsswb/mpoly.hpp"
#include "bsswb/program.hpp"
#include "bsswb/rat.hpp"
#include "bsswb/ratfunc.hpp"
#include "bsswb/sign.hpp"
#include "bsswb/transcend.hpp"
#include "bsswb/upoly.hpp"
#include "bsswb/vm.hpp"
