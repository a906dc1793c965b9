#pragma once

#include "condcap/arc_map.hpp"
#include "condcap/asymptotics.hpp"
#include "condcap/elliptic.hpp"
#include "condcap/errors.hpp"
#include "condcap/exact_capacity.hpp"
#include "condcap/geometry.hpp"
#include "condcap/nome.hpp"
#include "condcap/oracle_fd.hpp"
#include "condcap/theta.hpp"
