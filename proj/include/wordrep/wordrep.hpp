#pragma once

#include "wordrep/core.hpp"
#include "wordrep/patterns.hpp"
#include "wordrep/construct.hpp"
#include "wordrep/trep.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/io.hpp"
