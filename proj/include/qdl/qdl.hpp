#pragma once

#include "qdl/builtins.hpp"
#include "qdl/congruence.hpp"
#include "qdl/coxeter.hpp"
#include "qdl/enumerate.hpp"
#include "qdl/errors.hpp"
#include "qdl/group.hpp"
#include "qdl/iso.hpp"
#include "qdl/json_io.hpp"
#include "qdl/parser.hpp"
#include "qdl/perm.hpp"
#include "qdl/pquandle.hpp"
#include "qdl/presentation.hpp"
#include "qdl/quandle.hpp"
#include "qdl/symplectic.hpp"
#include "qdl/words.hpp"
