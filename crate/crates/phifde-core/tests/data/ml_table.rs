/// (p, q, x, reference) — reference values computed by 40-digit
/// arbitrary-precision summation of the defining series, with the
/// branch-cut integral representation cross-checking the extreme range.
#[rustfmt::skip]
pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.05, 0.15, -5.0, 0.019022777667878216),
    (0.05, 0.15, -25.0, 0.0041224857150080367),
    (0.05, 0.6, -3.5, 0.14018072149084519),
    (0.05, 0.6, -12.0, 0.047919477244872248),
    (0.05, 1.0, -0.8, 0.54847385588357746),
    (0.05, 1.0, -2.2, 0.30616687855566949),
    (0.05, 1.0, -7.5, 0.11452115289409101),
    (0.05, 1.0, -50.0, 0.019022861277082139),
    (0.05, 1.8, -5.0, 0.18098804813676383),
    (0.05, 1.8, -25.0, 0.041830081789607566),
    (0.05, 3.5, -3.5, 0.069767564560277003),
    (0.05, 3.5, -12.0, 0.024344799248076737),
    (0.12, 0.15, -0.8, 0.05562588937504174),
    (0.12, 0.15, -2.2, 0.02139445421684238),
    (0.12, 0.15, -7.5, 0.0052189607287649879),
    (0.12, 0.15, -50.0, 0.00064258447835064688),
    (0.12, 0.6, -5.0, 0.094121601523616997),
    (0.12, 0.6, -25.0, 0.021046144187831454),
    (0.12, 1.0, -3.5, 0.20933930809908509),
    (0.12, 1.0, -12.0, 0.071440565660872538),
    (0.12, 1.8, -0.8, 0.60573109810351512),
    (0.12, 1.8, -2.2, 0.34302438087912456),
    (0.12, 1.8, -7.5, 0.1297097234131423),
    (0.12, 1.8, -50.0, 0.021658657789831117),
    (0.12, 3.5, -5.0, 0.055860873680301386),
    (0.12, 3.5, -25.0, 0.013112096621083434),
    (0.2, 0.15, -3.5, -0.0022508642224502867),
    (0.2, 0.15, -12.0, -0.0027722411412815945),
    (0.2, 0.6, -0.8, 0.32211438458047835),
    (0.2, 0.6, -2.2, 0.16380563186646972),
    (0.2, 0.6, -7.5, 0.056281816715719265),
    (0.2, 0.6, -50.0, 0.0089293806737505024),
    (0.2, 1.0, -5.0, 0.1481934412461192),
    (0.2, 1.0, -25.0, 0.03331136859148481),
    (0.2, 1.8, -3.5, 0.24782866671214758),
    (0.2, 1.8, -12.0, 0.086023064586778335),
    (0.2, 3.5, -0.8, 0.18340466328797337),
    (0.2, 3.5, -2.2, 0.10872392194399854),
    (0.2, 3.5, -7.5, 0.04271801964316894),
    (0.2, 3.5, -50.0, 0.0072753887662434963),
    (0.3, 0.15, -2.2, -0.02164261502477556),
    (0.3, 0.15, -7.5, -0.013521975095906389),
    (0.3, 0.15, -50.0, -0.0025869530336583631),
    (0.3, 0.6, -2.2, 0.13926770947640986),
    (0.3, 0.6, -7.5, 0.044102501278612106),
    (0.3, 0.6, -50.0, 0.0066836490953784138),
    (0.3, 1.0, -0.8, 0.51438195868824425),
    (0.3, 1.0, -2.2, 0.27029794794709049),
    (0.3, 1.0, -7.5, 0.094995693498016271),
    (0.3, 1.0, -50.0, 0.015228201501814695),
    (0.3, 1.8, -2.2, 0.35303663924737579),
    (0.3, 1.8, -7.5, 0.13310819567235825),
    (0.3, 1.8, -50.0, 0.022139313431842484),
    (0.3, 3.5, -2.2, 0.11639592264389168),
    (0.3, 3.5, -7.5, 0.04670144439799327),
    (0.3, 3.5, -50.0, 0.0080375088447561591),
    (0.4, 0.15, -0.8, -0.028467175664194571),
    (0.4, 0.15, -3.5, -0.038317003829098824),
    (0.4, 0.15, -12.0, -0.015217026691676209),
    (0.4, 0.6, -2.2, 0.11331460595304572),
    (0.4, 0.6, -3.5, 0.070467911696296659),
    (0.4, 0.6, -5.0, 0.048369616923387541),
    (0.4, 0.6, -25.0, 0.0089705807204064996),
    (0.4, 1.0, -3.5, 0.17172487449879334),
    (0.4, 1.0, -7.5, 0.085337996843680936),
    (0.4, 1.0, -50.0, 0.013341638451394954),
    (0.4, 1.8, -0.8, 0.62984218660959764),
    (0.4, 1.8, -3.5, 0.25440298917958287),
    (0.4, 1.8, -12.0, 0.087354760868485718),
    (0.4, 3.5, -2.2, 0.12429355685775494),
    (0.4, 3.5, -3.5, 0.091906599198423247),
    (0.4, 3.5, -5.0, 0.070608362156368927),
    (0.4, 3.5, -25.0, 0.017218001886290624),
    (0.5, 0.15, -3.5, -0.055695961827931963),
    (0.5, 0.15, -5.0, -0.042944860913736113),
    (0.5, 0.15, -12.0, -0.019930772056098451),
    (0.5, 0.6, -0.8, 0.24377979966617754),
    (0.5, 0.6, -3.5, 0.047915938455716466),
    (0.5, 0.6, -5.0, 0.030511101599759178),
    (0.5, 0.6, -7.5, 0.018459211002946271),
    (0.5, 0.6, -50.0, 0.0022088984545221087),
    (0.5, 1.0, -2.2, 0.23559296367861403),
    (0.5, 1.0, -3.5, 0.1552936556088943),
    (0.5, 1.0, -5.0, 0.11070463773306863),
    (0.5, 1.0, -25.0, 0.022549572432641359),
    (0.5, 1.8, -3.5, 0.25668864833646386),
    (0.5, 1.8, -5.0, 0.19135763621520362),
    (0.5, 1.8, -12.0, 0.087089433884053506),
    (0.5, 3.5, -0.8, 0.20703935159873533),
    (0.5, 3.5, -3.5, 0.098861267614830476),
    (0.5, 3.5, -5.0, 0.076389056726025596),
    (0.5, 3.5, -7.5, 0.055346028165082406),
    (0.5, 3.5, -50.0, 0.0097069215120068786),
    (0.6, 0.15, -2.2, -0.098146286630741245),
    (0.6, 0.15, -5.0, -0.053848048420560551),
    (0.6, 0.15, -7.5, -0.03689923056918952),
    (0.6, 0.15, -50.0, -0.0055857792340017154),
    (0.6, 0.6, -2.2, 0.055220414269634895),
    (0.6, 0.6, -5.0, 0.011732767406084412),
    (0.6, 0.6, -7.5, 0.0051635894144771513),
    (0.6, 0.6, -50.0, 0.00010979389735394112),
    (0.6, 1.0, -2.2, 0.21562702692966571),
    (0.6, 1.0, -5.0, 0.09511784643875462),
    (0.6, 1.0, -7.5, 0.062638906158043227),
    (0.6, 1.0, -50.0, 0.0090837447731034546),
    (0.6, 1.8, -2.2, 0.36772503474295482),
    (0.6, 1.8, -5.0, 0.19143399601022771),
    (0.6, 1.8, -7.5, 0.13337052044284313),
    (0.6, 1.8, -50.0, 0.021513930349748839),
    (0.6, 3.5, -2.2, 0.14080642348493107),
    (0.6, 3.5, -5.0, 0.082468938031372164),
    (0.6, 3.5, -7.5, 0.06002829143386603),
    (0.6, 3.5, -50.0, 0.010610574521182048),
    (0.7, 0.15, -2.2, -0.127622676819784),
    (0.7, 0.15, -5.0, -0.062976729194772751),
    (0.7, 0.15, -7.5, -0.041116318071246419),
    (0.7, 0.15, -50.0, -0.0056901012190525799),
    (0.7, 0.6, -2.2, 0.021612901148433637),
    (0.7, 0.6, -5.0, -0.0081092271648543275),
    (0.7, 0.6, -7.5, -0.008282744022107327),
    (0.7, 0.6, -50.0, -0.0017983977181568896),
    (0.7, 1.0, -2.2, 0.19347591282737862),
    (0.7, 1.0, -5.0, 0.07756935776476981),
    (0.7, 1.0, -7.5, 0.049440801830311783),
    (0.7, 1.0, -50.0, 0.0067936656703830939),
    (0.7, 1.8, -2.2, 0.37258882901074193),
    (0.7, 1.8, -5.0, 0.1905228827781),
    (0.7, 1.8, -7.5, 0.13161088471102396),
    (0.7, 1.8, -50.0, 0.02084056285435079),
    (0.7, 3.5, -2.2, 0.14944231682104444),
    (0.7, 3.5, -5.0, 0.088877037055407319),
    (0.7, 3.5, -7.5, 0.064972803499695424),
    (0.7, 3.5, -50.0, 0.011556342422114993),
    (0.8, 0.15, -2.2, -0.16151834716886435),
    (0.8, 0.15, -7.5, -0.042386426809866002),
    (0.8, 0.15, -12.0, -0.024404861641221746),
    (0.8, 0.6, -0.8, 0.16233066344532914),
    (0.8, 0.6, -5.0, -0.029258048687151844),
    (0.8, 0.6, -7.5, -0.021664996615254228),
    (0.8, 0.6, -12.0, -0.014065868892203147),
    (0.8, 0.6, -25.0, -0.006848202402473152),
    (0.8, 1.0, -3.5, 0.091988074514627063),
    (0.8, 1.0, -7.5, 0.034847237775122025),
    (0.8, 1.0, -12.0, 0.020268165216948834),
    (0.8, 1.0, -50.0, 0.0044677761579029923),
    (0.8, 1.8, -2.2, 0.37783694330226885),
    (0.8, 1.8, -7.5, 0.12868703496331706),
    (0.8, 1.8, -12.0, 0.081644319565254264),
    (0.8, 3.5, -0.8, 0.22925762168123095),
    (0.8, 3.5, -5.0, 0.095652975452125114),
    (0.8, 3.5, -7.5, 0.070205267573471155),
    (0.8, 3.5, -12.0, 0.047318825872987875),
    (0.8, 3.5, -25.0, 0.024298013338424719),
    (0.9, 0.15, -3.5, -0.12276806920985625),
    (0.9, 0.15, -7.5, -0.039291779497776638),
    (0.9, 0.15, -12.0, -0.021029920800779031),
    (0.9, 0.15, -50.0, -0.0043151473601675976),
    (0.9, 0.6, -2.2, -0.06053064313099077),
    (0.9, 0.6, -7.5, -0.034612532671919323),
    (0.9, 0.6, -12.0, -0.020796616661441409),
    (0.9, 1.0, -0.8, 0.45247684234433445),
    (0.9, 1.0, -5.0, 0.034431324804098418),
    (0.9, 1.0, -7.5, 0.018662932471857276),
    (0.9, 1.0, -12.0, 0.010275288049933645),
    (0.9, 1.0, -25.0, 0.0045121471218401887),
    (0.9, 1.8, -3.5, 0.25902549021672405),
    (0.9, 1.8, -7.5, 0.1243590852899333),
    (0.9, 1.8, -12.0, 0.077905303062743791),
    (0.9, 1.8, -50.0, 0.018714763693265837),
    (0.9, 3.5, -2.2, 0.16748664598891087),
    (0.9, 3.5, -7.5, 0.075762311959311683),
    (0.9, 3.5, -12.0, 0.051149154767729795),
    (0.95, 0.15, -0.8, -0.25077822584449888),
    (0.95, 0.15, -5.0, -0.072215338628717283),
    (0.95, 0.15, -12.0, -0.017996599836717777),
    (0.95, 0.15, -25.0, -0.0076312251455452125),
    (0.95, 0.15, -50.0, -0.0036393122531893918),
    (0.95, 0.6, -2.2, -0.085267911880371633),
    (0.95, 0.6, -7.5, -0.040734153484421621),
    (0.95, 0.6, -12.0, -0.02356984375336972),
    (0.95, 0.6, -25.0, -0.0106314644590407),
    (0.95, 1.0, -3.5, 0.047816310636837024),
    (0.95, 1.0, -12.0, 0.0051537977632854272),
    (0.95, 1.0, -25.0, 0.0022247079107317236),
    (0.95, 1.8, -0.8, 0.69982139040227147),
    (0.95, 1.8, -5.0, 0.18285713455067771),
    (0.95, 1.8, -12.0, 0.075583947938791217),
    (0.95, 1.8, -25.0, 0.036108523778852141),
    (0.95, 1.8, -50.0, 0.018015628190723661),
    (0.95, 3.5, -2.2, 0.17214764165986686),
    (0.95, 3.5, -7.5, 0.078678257201858124),
    (0.95, 3.5, -12.0, 0.053143475421775884),
    (0.95, 3.5, -25.0, 0.027289085092442018),
    (0.99, 0.15, -3.5, -0.14073970985628059),
    (0.99, 0.15, -12.0, -0.014786264268048154),
    (0.99, 0.15, -25.0, -0.0062906587497555301),
    (0.99, 0.6, -0.8, 0.11434096802627758),
    (0.99, 0.6, -5.0, -0.075295813328393769),
    (0.99, 0.6, -12.0, -0.025387539308117083),
    (0.99, 0.6, -25.0, -0.011279427439292679),
    (0.99, 0.6, -50.0, -0.0054704901786384717),
    (0.99, 1.0, -2.2, 0.11395262253643683),
    (0.99, 1.0, -7.5, 0.0024664680868175332),
    (0.99, 1.0, -12.0, 0.0010348294476381981),
    (0.99, 1.0, -25.0, 0.00043846033679165094),
    (0.99, 1.8, -3.5, 0.25828159211263941),
    (0.99, 1.8, -12.0, 0.073483025213848061),
    (0.99, 1.8, -25.0, 0.034951041838458416),
    (0.99, 3.5, -0.8, 0.24212604009741429),
    (0.99, 3.5, -5.0, 0.10974453367980084),
    (0.99, 3.5, -12.0, 0.054779323762598539),
    (0.99, 3.5, -25.0, 0.028113765724714423),
    (0.99, 3.5, -50.0, 0.014493155260442613),
    (1.0, 0.15, -2.2, -0.25549873324711744),
    (1.0, 0.15, -7.5, -0.029167863745946928),
    (1.0, 0.15, -12.0, -0.013861977803884826),
    (1.0, 0.15, -25.0, -0.005925527759078736),
    (1.0, 0.6, -3.5, -0.10834175682277148),
    (1.0, 0.6, -12.0, -0.025774573950164025),
    (1.0, 0.6, -25.0, -0.011413156676982018),
    (1.0, 1.0, -0.8, 0.44932896411722157),
    (1.0, 1.0, -5.0, 0.0067379469990854671),
    (1.0, 1.0, -12.0, 6.1442123533282098e-6),
    (1.0, 1.0, -25.0, 1.3887943864964021e-11),
    (1.0, 1.0, -50.0, 1.9287498479639178e-22),
    (1.0, 1.8, -2.2, 0.39138827839746173),
    (1.0, 1.8, -7.5, 0.11825974044050439),
    (1.0, 1.8, -12.0, 0.072921535917488641),
    (1.0, 1.8, -25.0, 0.034646875524635329),
    (1.0, 3.5, -3.5, 0.13904983857454336),
    (1.0, 3.5, -12.0, 0.055194109083750737),
    (1.0, 3.5, -25.0, 0.028321583162980082),
    (1.02, 0.15, -0.8, -0.28494108066722946),
    (1.02, 0.15, -5.0, -0.069301932222408447),
    (1.02, 0.15, -12.0, -0.011854324772034906),
    (1.02, 0.15, -25.0, -0.0051605794432680587),
    (1.02, 0.15, -50.0, -0.0024887508754663958),
    (1.02, 0.6, -2.2, -0.12331918426863277),
    (1.02, 0.6, -7.5, -0.048631263573323211),
    (1.02, 0.6, -12.0, -0.02645552132301428),
    (1.02, 0.6, -25.0, -0.011644749530891027),
    (1.02, 1.0, -3.5, 0.022660826787015249),
    (1.02, 1.0, -12.0, -0.0020455749096458228),
    (1.02, 1.0, -25.0, -0.00086531401237124756),
    (1.02, 1.8, -0.8, 0.71181661362063584),
    (1.02, 1.8, -5.0, 0.17898065261614395),
    (1.02, 1.8, -12.0, 0.071752748923359962),
    (1.02, 1.8, -25.0, 0.034020643745866892),
    (1.02, 1.8, -50.0, 0.01692393047560145),
    (1.02, 3.5, -2.2, 0.17875625351594486),
    (1.02, 3.5, -7.5, 0.082935483034062362),
    (1.02, 3.5, -12.0, 0.056030871148620034),
    (1.02, 3.5, -25.0, 0.028739127284723787),
    (1.1, 0.15, -3.5, -0.17260715475722706),
    (1.1, 0.15, -12.0, -0.0013190457215979138),
    (1.1, 0.15, -25.0, -0.0016874032739699012),
    (1.1, 0.6, -0.8, 0.091195853926123522),
    (1.1, 0.6, -5.0, -0.10977964258600322),
    (1.1, 0.6, -12.0, -0.02758128573750357),
    (1.1, 0.6, -25.0, -0.012054176321409328),
    (1.1, 0.6, -50.0, -0.0058241691289176948),
    (1.1, 1.0, -2.2, 0.078396751533689953),
    (1.1, 1.0, -7.5, -0.020251401394880918),
    (1.1, 1.0, -12.0, -0.010048858134930517),
    (1.1, 1.0, -25.0, -0.0041272915683571045),
    (1.1, 1.8, -3.5, 0.2574315985683472),
    (1.1, 1.8, -12.0, 0.066407786227292072),
    (1.1, 1.8, -25.0, 0.03127552722721441),
    (1.1, 3.5, -0.8, 0.24900111629473565),
    (1.1, 3.5, -5.0, 0.11880314941467685),
    (1.1, 3.5, -12.0, 0.059478905972281205),
    (1.1, 3.5, -25.0, 0.03043311918797594),
    (1.1, 3.5, -50.0, 0.015656924936655197),
    (1.25, 0.15, -2.2, -0.46798286171913095),
    (1.25, 0.15, -7.5, 0.071222718226757026),
    (1.25, 0.15, -25.0, 0.0053530515036537085),
    (1.25, 0.15, -50.0, 0.0024132768327964724),
    (1.25, 0.6, -2.2, -0.2751597437848619),
    (1.25, 0.6, -7.5, -0.067823543218480362),
    (1.25, 0.6, -25.0, -0.010471399225022908),
    (1.25, 0.6, -50.0, -0.0051667570796469164),
    (1.25, 1.0, -2.2, 0.030259811812379737),
    (1.25, 1.0, -7.5, -0.062153693665700199),
    (1.25, 1.0, -25.0, -0.0088890973462113901),
    (1.25, 1.0, -50.0, -0.0042572794085854682),
    (1.25, 1.8, -2.2, 0.42193564448681383),
    (1.25, 1.8, -7.5, 0.09055890865998296),
    (1.25, 1.8, -25.0, 0.025129623322921829),
    (1.25, 1.8, -50.0, 0.012469356620520254),
    (1.25, 3.5, -2.2, 0.20082687564815151),
    (1.25, 3.5, -7.5, 0.098798617142387971),
    (1.25, 3.5, -25.0, 0.033690182286512854),
    (1.25, 3.5, -50.0, 0.017250499509369962),
    (1.39, 0.15, -2.2, -0.64207369980330918),
    (1.39, 0.15, -7.5, 0.19797340853882451),
    (1.39, 0.15, -25.0, -0.0041677279474630305),
    (1.39, 0.15, -50.0, 0.0051049969118901293),
    (1.39, 0.6, -2.2, -0.3767089710300789),
    (1.39, 0.6, -7.5, -0.098229594050226081),
    (1.39, 0.6, -25.0, -0.010784751924920888),
    (1.39, 0.6, -50.0, -0.0033922727598957741),
    (1.39, 1.0, -2.2, -0.0060447974102627329),
    (1.39, 1.0, -7.5, -0.13173246954043374),
    (1.39, 1.0, -25.0, -0.010975815001096844),
    (1.39, 1.0, -50.0, -0.0054056628536204749),
    (1.39, 1.8, -2.2, 0.45009216671047436),
    (1.39, 1.8, -7.5, 0.062860229747418095),
    (1.39, 1.8, -25.0, 0.018812016394269656),
    (1.39, 1.8, -50.0, 0.0092480632172555378),
    (1.39, 3.5, -2.2, 0.21408881162031012),
    (1.39, 3.5, -7.5, 0.11049042427291106),
    (1.39, 3.5, -25.0, 0.036755496403940794),
    (1.39, 3.5, -50.0, 0.018700956842049271),
    (1.6, 0.15, -2.2, -0.93190863927523984),
    (1.6, 0.15, -7.5, 0.23907021890076923),
    (1.6, 0.15, -50.0, 0.12533125534599498),
    (1.6, 0.6, -0.8, 0.070831505595565985),
    (1.6, 0.6, -5.0, -0.6317304349281182),
    (1.6, 0.6, -25.0, 0.027000080120931388),
    (1.6, 0.6, -50.0, 0.017662037122724757),
    (1.6, 1.0, -3.5, -0.28413496146779788),
    (1.6, 1.0, -12.0, -0.088684909156746181),
    (1.6, 1.0, -50.0, -0.010302603564605542),
    (1.6, 1.8, -2.2, 0.5093781551355575),
    (1.6, 1.8, -7.5, 0.010317072092011962),
    (1.6, 1.8, -50.0, 0.0021897510892594525),
    (1.6, 3.5, -0.8, 0.27375420451377207),
    (1.6, 3.5, -5.0, 0.1708155838189702),
    (1.6, 3.5, -25.0, 0.040880553825980109),
    (1.6, 3.5, -50.0, 0.020692623884467571),
    (2.0, 0.15, -3.5, -1.6704805180942163),
    (2.0, 0.15, -12.0, 0.26285173254618779),
    (2.0, 0.6, -0.8, 0.15828360519804138),
    (2.0, 0.6, -5.0, -1.2862232170855293),
    (2.0, 0.6, -25.0, 1.5219592434304943),
    (2.0, 1.0, -2.2, 0.087444801678347242),
    (2.0, 1.0, -7.5, -0.91989649189290526),
    (2.0, 1.0, -50.0, 0.70534790630844231),
    (2.0, 1.8, -3.5, 0.45906737232900944),
    (2.0, 1.8, -12.0, -0.23250437899638526),
    (2.0, 3.5, -0.8, 0.28595500409781204),
    (2.0, 3.5, -5.0, 0.21773986912697467),
    (2.0, 3.5, -25.0, 0.054081424433076005),
    (0.13483787105391948, 2.30808901269292, -1.8844079655148243, 0.31139036115924255),
    (0.8605479945021777, 3.729491954790569, -6.198860037870783, 0.069024925074881933),
    (1.1626638382626473, 1.815228112195972, -48.812992728590075, 0.014967755279946001),
    (0.30562506504772635, 0.5741754594487393, -15.4310063868557, 0.019366297390148098),
    (1.2850486684738445, 1.707169065129504, -27.391745840820796, 0.017542871387874381),
    (1.1794124897451246, 2.0666704748499503, -14.995352173215482, 0.062950259962540725),
    (1.5928713734145326, 3.1605252300965923, -12.212384571000422, 0.09864747859357209),
    (1.1573589463121685, 2.387124441960959, -43.75812340371571, 0.025052730240195299),
    (1.4643016730896508, 1.33132305376133, -49.00894062615418, -0.0025837572038295537),
    (1.3430673959381025, 3.4523403546470184, -28.655566754466427, 0.032172873010740935),
    (1.1968523566679365, 2.63053365905709, -22.81570451175764, 0.048970282692769571),
    (1.683136205414832, 4.253830873230322, -23.71017588760803, 0.028870640725063237),
    (1.3350213668398554, 0.3199789528076277, -35.07758614500815, 0.0014265313296013878),
    (1.3013151319647842, 4.469276930626521, -41.09802008261965, 0.0097491167372186542),
    (0.5834991535464155, 1.7667719188878632, -33.43594926705057, 0.031810787284303482),
    (0.2760936395969948, 1.1518860099512687, -19.553575659630024, 0.045256230017097013),
    (1.1078910201051941, 3.9810580276647305, -40.965799093408705, 0.013041372408124023),
    (0.48200544568810505, 2.2080841500190367, -29.460283951575462, 0.035906886030207424),
    (1.3871774411292361, 2.3439368771649636, -30.883461542962294, 0.031854331576644881),
    (1.3588761632500126, 0.2902683748458664, -44.97765517279703, 0.002116095193062918),
    (1.564339591598024, 3.9415836693984208, -39.89567732861634, 0.019916292155133584),
    (0.796910235644712, 1.8254558038252149, -5.18581931457911, 0.18396736110020383),
    (0.43335110718340564, 0.7722491855858336, -17.00928207509485, 0.022578479595739836),
    (1.7511781072001629, 2.7826069956587305, -7.436038761691263, 0.21279902754287756),
    (0.2632276169091459, 3.8277693228565366, -49.65520505801865, 0.0054924104495291284),
    (1.90295143429191, 2.400745407937455, -7.338660919565544, 0.23859184297017037),
    (1.0954814032465865, 0.17033908682864995, -26.410190952505943, -0.0026030520894081585),
    (1.5484370586360219, 2.4200361688433114, -38.954954017995476, 0.024021196281981544),
    (0.6727366901945695, 1.0425354453091737, -40.577447226212016, 0.01038820373522046),
    (1.640299227784239, 3.342434940671928, -11.344707106678928, 0.10477566940630409),
    (1.3911934445662444, 4.306492089718954, -22.366911611558507, 0.021898028133670364),
    (0.7419790530164949, 1.0310573373332568, -11.35002287826909, 0.030612075207204903),
    (1.8026105090105462, 3.7899380963928397, -23.978876578814297, 0.043512154889896051),
    (1.3279595874056904, 4.098508262105167, -39.11732117606352, 0.014891972910464028),
    (1.5824881534201471, 1.5297015393975142, -40.043170209145586, -0.0043982678474272606),
    (1.9438814321846734, 1.8114813030590442, -20.0753270252064, -0.23782561338222829),
    (0.2715359672497714, 0.7226206166976298, -45.24355626570463, 0.011161597347216288),
    (1.6168739244237484, 0.7004756739102401, -41.3272588214841, -0.059615000941857843),
    (1.1063468870938227, 0.6328781414420543, -0.7220044784237167, 0.15915349732955789),
    (1.6557873985941378, 0.9891384011102623, -12.599222220159037, -0.10287646390965486),
    (0.5335422946350161, 1.9146058597577194, -6.5623730884091325, 0.15200673894595355),
    (1.175030568642863, 4.074120646712077, -21.03720725274617, 0.023627825444487356),
    (1.0565430394625894, 0.13323666217911914, -22.01184437012332, -0.0033883640634249032),
    (0.3612464901826288, 2.1570435494557056, -36.262411589664424, 0.028806607711266252),
    (1.1218217373063823, 1.5006205721674453, -25.922252148024814, 0.01677139981362778),
    (1.1197749122628888, 3.540012515376366, -5.314409761075364, 0.11170228882156605),
    (1.1293863444962255, 1.1557997286417505, -13.85308435253443, 0.0009766449110860535),
    (1.2328052110020316, 2.2997114322879364, -25.61295200704162, 0.040684657314284675),
    (1.3916073850454937, 2.0629387755788477, -26.668939024582755, 0.028280595540600819),
    (1.755540253925575, 4.242703617950911, -12.987018782943357, 0.053625110751554558),
    (1.1278373368654755, 4.247538301360003, -42.00158917182636, 0.01007329932925946),
    (0.1636412773198468, 1.120842475117051, -3.6653071409639897, 0.21401553992265183),
    (1.3455548477135935, 3.5385152764205405, -44.85235137960955, 0.019863757063825144),
    (0.45478390498780097, 4.288643373689489, -19.918861167116425, 0.0094667739555053628),
    (0.6914499657908634, 0.9210637642959937, -15.933093161201322, 0.016958178023485118),
    (1.4498586535795477, 0.13669902983314955, -27.70697188793832, -0.019314092308800204),
    (0.8921070415693501, 0.13046481468031734, -16.581579478208113, -0.013869670145876522),
    (0.2274635966602065, 1.231761011928663, -1.989013613804242, 0.35123867344401477),
    (1.5624149115344266, 1.2534851339698256, -6.486482409690808, -0.21861055386827883),
    (0.1339024946330737, 3.112514792501039, -21.271598869378177, 0.022766153771512036),
    (1.6072246113113517, 0.42265424174360533, -42.812869532243724, -0.021273649730563654),
    (0.6915205190235797, 2.511135327138256, -46.33419751072065, 0.022549699870748058),
    (0.11975184007487456, 0.9478687070198254, -15.606500279883058, 0.053470348028011324),
    (1.0101754277264419, 0.8416544847475327, -17.356581096171666, -0.0093039014344940948),
    (1.471499159195981, 2.5021686196500785, -9.480930259723982, 0.11923485233606805),
    (1.672535587993841, 1.7992330362490574, -25.339230748236734, 0.016130585017395126),
    (0.8213014632395458, 1.5966072016907826, -2.728882954053928, 0.29542793321388914),
    (0.5260758760039999, 0.7764470152298723, -4.233398786669456, 0.074452682675150711),
    (0.5782278989671265, 1.1278475562665653, -14.65999404409097, 0.04222179572185415),
    (0.9297168279215471, 0.7510215822399654, -22.29677216560468, -0.0072537915511560652),
    (1.1032052807554387, 1.1377868980414263, -48.28368183523867, 0.00069597400323260842),
    (0.41794050731804366, 2.296073595838691, -0.25747706988212615, 0.71935211161376443),
    (0.543053997887281, 0.4494026205703606, -19.981563402743404, -0.003735065058276753),
    (1.5060704477682652, 2.9760693462413936, -35.80251206721525, 0.031604939969252567),
    (1.293574510414968, 0.24485689677755706, -41.766124266262345, 0.0017029099234223645),
    (1.786045864639452, 2.841627953277073, -36.695267652613325, 0.024618628104955881),
    (1.0186546814858124, 3.7654722907947673, -40.23583351138105, 0.014829417624586192),
    (1.6562900605739208, 2.6490737497877626, -44.64255852291134, 0.023574543605659644),
    (1.2629788748719135, 2.8367077422508973, -34.03640216228022, 0.032680802420595248),
    (0.9888027434223139, 0.06474875571892343, -39.88690062802192, -0.0019389564216640751),
    (1.5015654330429373, 2.288221183012919, -26.76463871334625, 0.032265335730030243),
    (0.3, 1.0, 2.2, 3445812.9100569086),
    (0.5, 0.8, 0.5, 1.8450361020861006),
    (0.5, 1.0, 10.0, 5.3762342836322709e+43),
    (0.9, 0.8, 0.5, 1.6287832745312126),
    (0.9, 1.0, 10.0, 451737.7745677374),
    (1.0, 0.8, 0.5, 1.5754251131502299),
    (1.0, 1.0, 10.0, 22026.465794806717),
    (1.5, 0.8, 0.5, 1.3441613610575653),
    (1.5, 1.0, 10.0, 69.165433808528797),
    (2.0, 0.8, 0.5, 1.1714482675221671),
    (2.0, 1.0, 10.0, 11.833336070820503),
];

/// Additional reference values in sparse parameter bands: tiny p with |x|
/// slightly above 1 (slow series, pre-asymptotic), and p at the edges of the
/// complex-ray window. Same oracle as above.
#[rustfmt::skip]
pub const ML_REFERENCE_GAP: &[(f64, f64, f64, f64)] = &[
    (0.05, 1.0, -1.12, 0.46448223197238345),
    (0.05, 3.9, -1.15, 0.090654443567397753),
    (0.05, 0.15, -1.17, 0.060066416095703916),
    (0.1, 0.6, -1.35, 0.26026061311412956),
    (0.1, 3.5, -1.3, 0.13902592079690605),
    (0.164, 1.0, -1.6, 0.36121647428245798),
    (0.88, 0.5, -9.0, -0.032813312934318587),
    (1.12, 0.7, -12.0, -0.026948459271697481),
    (1.05, 0.8, -10.0, -0.024973546919396389),
    (0.95, 1.0, -20.0, 0.0028432225780766326),
    (1.3, 2.2, -16.0, 0.059425716459632032),
    (2.0, 0.7, -40.0, 1.5220354320770992),
];
