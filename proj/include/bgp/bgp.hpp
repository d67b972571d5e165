#pragma once

#include "bgp/approx3.hpp"
#include "bgp/approx4.hpp"
#include "bgp/approxk.hpp"
#include "bgp/edge_list.hpp"
#include "bgp/generators.hpp"
#include "bgp/oracle.hpp"
#include "bgp/report.hpp"
#include "bgp/verify.hpp"
