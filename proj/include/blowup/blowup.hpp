#pragma once

#include "blowup/rational.hpp"
#include "blowup/errors.hpp"
#include "blowup/classgroup.hpp"
#include "blowup/class_text.hpp"
#include "blowup/lp_oracle.hpp"
#include "blowup/lineargen.hpp"
#include "blowup/conemaps.hpp"
#include "blowup/weyl.hpp"
#include "blowup/shgh.hpp"
#include "blowup/catalog.hpp"
