#pragma once

// Copy of data/registry.tsv; a test keeps the two identical.
namespace gtopo {

inline constexpr const char* embedded_registry = R"tsv(# coordinate<TAB>common names separated by |<TAB>catalog tags separated by spaces
sd-sd	Prisoner's Dilemma	RGG#12 Brams#32
sc-sc	Chicken|Hawk-Dove|Snowdrift	RGG#66 Brams#57
sb-sb	Leader|Battle of the Sexes|Bach or Stravinsky	RGG#68 Brams#54
sr-sr	Hero|Battle of the Sexes|Bach or Stravinsky	RGG#69 Brams#55
sm-sm	Compromise|Anti-Chicken|Prisoner's Delight	RGG#7 Brams#7
sk-sk	Deadlock|Lock|Anti-Prisoner's Dilemma	RGG#9 Brams#9
sn-sn	No Conflict|Concord	RGG#5
su-su	Stag Hunt	RGG#61
sa-sa	Assurance|Coordination	RGG#63
so-so	Coordination|Anti-Coordination	RGG#60
sp-sp	Peace|Resolution	RGG#5
sh-sh	Harmony	RGG#3
sd-sc	Called Bluff	
sc-sd	Called Bluff	
su-sd	Asymmetric Dilemma|Asymmetric Prisoner's Dilemma	
sa-sd	Alibi	
so-sd	Revelation	
sk-sd	Total Conflict	
sm-sd	Tragedy	
su-sm	Big Bully	
sa-sr	Fixed Cycle|Fixed Sum|Zero Sum	
sa-sb	Tragic Cycle	
sb-sc	Asymmetric Battle of the Sexes|Passive Samaritan's Dilemma	
sh-sc	Samaritan's Dilemma	
sc-sn	Hegemony	
sn-sc	Hegemony	
sn-su	Privileged Hunt	
so-sa	Pure Coordination	
sp-sa	Privileged	
sb-sn	Samson	
sr-sn	Delilah|Generous	
sr-sd	Patron	
sh-sn	Pure Aligned	
sp-su	Pure Aligned	
ld-ld	Low Dilemma	F&K#216
lb-lb	Low Battle|Low Battle of the Sexes	
lo-lo	Low Coordination	RGG#83
mk-mk	Midlock|Middle Deadlock	
mu-mu	Middle Hunt|Rousseau's Hunt	
mb-mb	Volunteer's Dilemma|Middle Battle|Middle Leader	F&K#445
hd-hd	High Dilemma|High Hunt	
hb-hb	High Hero|High Battle	
bd-bd	Basic Dilemma|Basic Discord	
bh-bh	Basic Harmony	
dd-dd	Double Dilemma|Avatamsaka|Interdependence	RGG#79
ze-ze	Zero|Indifference|Null	F&K#001
sd-ze	No Conflict-Zero	RGG#80
dd-dh	Double Safe	
dk-dd	Double Unfair	
do-db	Matching Pennies	
dd-ld	Red Dress	
mk-mh	Jekyll-Hyde	
mu-ld	Moral Hazard|Principal-Agent Problem	
mu-ln	Principal-Agent	
mm-mu	Middle Compromise-Rousseau's Hunt	RGG#81
mm-sp	Middle Compromise-Peace	RGG#82
mm-sd	Middle Compromise-Prisoner's Dilemma	F&K#507
mb-sn	Destabilized Chicken	F&K#533
lo-lb	Right Cycle	
)tsv";

}  // namespace gtopo
