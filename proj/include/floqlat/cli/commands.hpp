#pragma once

#include "floqlat/cli/config.hpp"
#include "floqlat/cli/table.hpp"

namespace floqlat::cli {

/// Runs cfg.command and returns its table. Throws ValidationError for
/// arguments that do not fit the command.
///
/// Columns:
///   pbc-spectrum      k_plus,k_minus,band,value
///   strip-spectrum    k,band,value
///   compare           check,open,sites,grid,max_abs_dev,mean_abs_dev,pairs_matched,
///                     degeneracy,tol,verdict
///   edge-wavefunction model,state,k_plus,value,side,edge_weight,decay_length,cell,density
///   phase-scan        jt,jt_over_pi,bulk_gap,gapless,floquet_edges,static_edges
///   nogo-check        m,mass_pos,r_pos,mass_neg,r_neg,required_abs_m,compatible,violated
Table run_command(const RunConfig& cfg);

/// The "meta" object of the JSON output.
nlohmann::ordered_json make_meta(const RunConfig& cfg);

}  // namespace floqlat::cli
