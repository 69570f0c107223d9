#pragma once

#include "centralizer.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "module.hpp"
#include "mpoly.hpp"
#include "parse.hpp"
#include "quat.hpp"
#include "rabinowitsch.hpp"
#include "random.hpp"
#include "rat.hpp"
#include "ratexpr.hpp"
#include "ratpoly.hpp"
#include "roots.hpp"
#include "selfcheck.hpp"
#include "upoly.hpp"
