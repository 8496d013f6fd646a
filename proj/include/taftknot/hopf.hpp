#pragma once

#include "taftknot/hopf_core.hpp"
#include "taftknot/quasi.hpp"
#include "taftknot/taft.hpp"
#include "taftknot/twist.hpp"
