#pragma once

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/matrix.hpp"
#include "twistcoh/exact/rational.hpp"
#include "twistcoh/exact/series.hpp"
#include "twistcoh/report/closed_form.hpp"
#include "twistcoh/report/oracle.hpp"
#include "twistcoh/report/pipeline.hpp"
#include "twistcoh/report/report_io.hpp"
#include "twistcoh/rootsys/cartan_type.hpp"
#include "twistcoh/rootsys/root_system.hpp"
#include "twistcoh/twist/automorphism.hpp"
#include "twistcoh/twist/folding.hpp"
#include "twistcoh/weyl/group.hpp"
#include "twistcoh/weyl/molien.hpp"
